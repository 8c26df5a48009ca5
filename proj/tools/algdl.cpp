// algdl: command-line front end. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "superalg/catalog.hpp"
#include "superalg/dsl.hpp"
#include "superalg/embedded.hpp"
#include "superalg/identity.hpp"
#include "superalg/proofs.hpp"

using json = nlohmann::ordered_json;
using namespace salg;

#ifndef ALGDL_VERSION
#define ALGDL_VERSION "0.0.0"
#endif

namespace {

struct InputError : Error {
    using Error::Error;
};

std::string sha256(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return "sha256:" + os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

std::pair<std::string, std::string> key_value(const std::string& s)
{
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
        throw InputError("expected k=v, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

long to_long(const std::string& s, const std::string& what)
{
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw InputError("bad " + what + " '" + s + "'");
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

AlgebraPtr load_algebra(const std::string& path, std::string& digest)
{
    auto text = read_file(path);
    digest = sha256(text);
    try {
        return parse_algebra(text);
    } catch (const DslError& e) {
        throw InputError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " +
                         e.what());
    }
}

struct SpecOpts {
    std::string specialize; // p=PRIME
    uint64_t seed = 1;
    std::string nonzero;
};

// Returns A itself when no specialization is asked for.
AlgebraPtr maybe_specialize(const AlgebraPtr& A, const SpecOpts& o, json& info)
{
    if (o.specialize.empty())
        return A;
    auto [k, v] = key_value(o.specialize);
    if (k != "p")
        throw InputError("--specialize expects p=PRIME");
    long p = to_long(v, "prime");
    if (p < 2 || p > 65521)
        throw InputError("prime out of range");
    auto s = make_specialization(A->ring(), o.seed, uint32_t(p), split_commas(o.nonzero));
    info = json::object();
    info["p"] = s.p;
    info["seed"] = o.seed;
    json vals = json::object();
    for (size_t i = 0; i < s.names.size(); ++i)
        vals[s.names[i]] = s.values[i];
    info["values"] = vals;
    return specialize_algebra(*A, s);
}

json candidates_json(const std::vector<proofs::Candidate>& cs)
{
    json out = json::array();
    for (auto& c : cs)
        out.push_back({{"source", c.source},
                       {"text", c.text},
                       {"note", c.note},
                       {"residual", c.residual},
                       {"zero", c.zero}});
    return out;
}

json case_json(const proofs::CaseReport& r)
{
    json recs = json::array();
    for (auto& x : r.records)
        recs.push_back({{"instance", x.instance},
                        {"label", x.label},
                        {"kind", x.kind},
                        {"text", x.text},
                        {"status", proofs::to_string(x.status)},
                        {"residual", x.residual},
                        {"candidates", candidates_json(x.candidates)}});
    return {{"type", "case"},
            {"id", r.id},
            {"field", r.field},
            {"all_verified", r.all_verified()},
            {"records", recs},
            {"emendations_applied", r.emendations_applied}};
}

std::string registry_text()
{
    std::string all;
    for (auto& [name, text] : embedded_files())
        if (name.rfind("proofs/", 0) == 0)
            all += name + "\n" + text;
    return all;
}

struct Run {
    std::string command;
    json inputs = json::object();
    std::string digest;
    json results = json::array();
};

// ---------------------------------------------------------------- commands

struct CatalogOpts {
    std::string family, emit;
    std::vector<std::string> sizes, params;
    long characteristic = -1;
};

int cmd_catalog(const CatalogOpts& o, Run& run)
{
    catalog::CatalogKey key{o.family, {}, {}, o.characteristic};
    for (auto& s : o.sizes) {
        auto [k, v] = key_value(s);
        key.sizes[k] = to_long(v, "size");
    }
    for (auto& s : o.params) {
        auto [k, v] = key_value(s);
        key.params[k] = v;
    }
    auto fams = catalog::families();
    if (std::find(fams.begin(), fams.end(), o.family) == fams.end())
        throw InputError("unknown family " + o.family);
    auto A = catalog::build(key);
    auto text = serialize_algebra(*A);
    write_file(o.emit, text);

    json sizes = json::object(), params = json::object();
    for (auto& [k, v] : key.sizes)
        sizes[k] = v;
    for (auto& [k, v] : key.params)
        params[k] = v;
    run.inputs = {{"family", o.family}, {"sizes", sizes}, {"params", params}, {"char", o.characteristic}};
    run.digest = sha256(text);
    run.results.push_back({{"type", "catalog"},
                           {"family", o.family},
                           {"algebra", A->name()},
                           {"dim", A->dim()},
                           {"characteristic", A->ring()->characteristic()}});
    if (o.emit != "-")
        std::cout << "wrote " << A->name() << " (dim " << A->dim() << ") to " << o.emit << "\n";
    return 0;
}

int cmd_check(const std::string& file, const std::string& identity, Run& run)
{
    auto A = load_algebra(file, run.digest);
    IdentitySpec spec;
    if (identity.find('/') != std::string::npos || identity.find(".id") != std::string::npos) {
        auto t = read_file(identity);
        run.digest = sha256(run.digest + "\n" + sha256(t));
        spec = parse_identity(t);
    } else {
        try {
            spec = builtin_spec(identity);
        } catch (const Error& e) {
            throw InputError(e.what());
        }
    }
    run.inputs = {{"identity", spec.name}};
    auto rep = check_identity(*A, spec);
    json witness = json::array();
    for (auto i : rep.witness)
        witness.push_back(A->basis_name(i));
    run.results.push_back({{"type", "identity"},
                           {"spec", rep.spec},
                           {"algebra", rep.algebra},
                           {"pass", rep.pass},
                           {"tuples_checked", rep.tuples_checked},
                           {"witness", witness},
                           {"residual", rep.residual ? json(rep.residual->str()) : json(nullptr)}});
    std::cout << spec.name << " on " << A->name() << ": " << (rep.pass ? "pass" : "FAIL") << " ("
              << rep.tuples_checked << " tuples)";
    if (!rep.pass) {
        std::cout << ", witness";
        for (auto& w : witness)
            std::cout << " " << w.get<std::string>();
        std::cout << ", residual " << rep.residual->str();
    }
    std::cout << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_center(const std::string& file, const SpecOpts& so, bool super, Run& run)
{
    auto A0 = load_algebra(file, run.digest);
    json spec_info = nullptr;
    auto A = maybe_specialize(A0, so, spec_info);
    run.inputs = {{"super", super}, {"specialization", spec_info}};
    auto z = center(*A, super);
    json even = json::array(), odd = json::array();
    for (auto& e : z.even_part)
        even.push_back(e.str());
    for (auto& e : z.odd_part)
        odd.push_back(e.str());
    run.results.push_back({{"type", "center"},
                           {"algebra", A->name()},
                           {"even_dim", z.even_part.size()},
                           {"odd_dim", z.odd_part.size()},
                           {"even_basis", even},
                           {"odd_basis", odd}});
    std::cout << "center of " << A->name() << ": even " << z.even_part.size() << ", odd " << z.odd_part.size()
              << "\n";
    return 0;
}

int cmd_simple(const std::string& file, int trials, const SpecOpts& so, Run& run)
{
    auto A0 = load_algebra(file, run.digest);
    json spec_info = nullptr;
    auto A = maybe_specialize(A0, so, spec_info);
    if (A->ring()->has_params())
        throw InputError(A->name() + " has parameters; pass --specialize p=PRIME");
    run.inputs = {{"trials", trials}, {"seed", so.seed}, {"specialization", spec_info}};
    auto pr = simplicity_probe(*A, trials, so.seed);
    json ideal = nullptr;
    if (pr.ideal) {
        json basis = json::array();
        for (auto& e : pr.ideal->closure_basis)
            basis.push_back(e.str());
        ideal = {{"generator", pr.ideal->generator.str()}, {"dim", basis.size()}, {"basis", basis}};
    }
    run.results.push_back({{"type", "simplicity"},
                           {"algebra", A->name()},
                           {"verdict", to_string(pr.verdict)},
                           {"certified", pr.certified},
                           {"ideal", ideal},
                           {"primes", pr.primes},
                           {"note", pr.note}});
    std::cout << A->name() << ": " << to_string(pr.verdict);
    if (pr.ideal)
        std::cout << ", ideal of dim " << pr.ideal->closure_basis.size() << " generated by "
                  << pr.ideal->generator.str();
    std::cout << "\n";
    return pr.verdict == Verdict::simple ? 0 : 1;
}

int cmd_verify(const std::string& id, const std::string& field, Run& run)
{
    proofs::field_characteristic(field);
    run.inputs = {{"case", id.empty() ? json(nullptr) : json(id)}, {"field", field}};
    run.digest = sha256(registry_text());
    std::vector<const proofs::ProofCase*> cases;
    if (!id.empty()) {
        cases.push_back(&proofs::find_case(id));
    } else {
        for (auto& c : proofs::registry())
            if (std::find(c.fields.begin(), c.fields.end(), field) != c.fields.end())
                cases.push_back(&c);
    }
    bool ok = true;
    for (auto* c : cases) {
        auto r = proofs::verify_case(*c, field);
        run.results.push_back(case_json(r));
        size_t good = 0;
        for (auto& x : r.records)
            good += x.status == proofs::Status::verified;
        std::cout << r.id << " [" << field << "]: " << good << "/" << r.records.size() << " verified\n";
        ok = ok && r.all_verified();
    }
    return ok ? 0 : 1;
}

int cmd_discrepancies(const std::string& field, Run& run)
{
    proofs::field_characteristic(field);
    run.inputs = {{"field", field}};
    run.digest = sha256(registry_text());
    bool ok = true;
    for (auto& d : proofs::discrepancy_report(field)) {
        bool fixed = false;
        for (auto& c : d.candidates)
            fixed = fixed || c.zero;
        ok = ok && fixed;
        run.results.push_back({{"type", "discrepancy"},
                               {"case", d.case_id},
                               {"instance", d.instance},
                               {"label", d.label},
                               {"text", d.text},
                               {"residual", d.residual},
                               {"resolved", fixed},
                               {"candidates", candidates_json(d.candidates)}});
    }
    std::cout << run.results.size() << " discrepancies, " << (ok ? "each" : "not each")
              << " with a zero-residual candidate\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"algdl: structure-constant superalgebras"};
    app.set_version_flag("--version", std::string(ALGDL_VERSION));
    app.require_subcommand(1);
    std::string report;

    CatalogOpts cat;
    auto* c_cat = app.add_subcommand("catalog", "export a catalog algebra as DSL text");
    c_cat->add_option("family", cat.family, "family name")->required();
    c_cat->add_option("--size", cat.sizes, "size k=v")->take_all();
    c_cat->add_option("--param", cat.params, "parameter k=v")->take_all();
    c_cat->add_option("--char", cat.characteristic, "characteristic");
    c_cat->add_option("--emit", cat.emit, "output file, - for stdout")->required();

    std::string file, identity;
    auto* c_check = app.add_subcommand("check", "check an identity on an algebra");
    c_check->add_option("file", file)->required();
    c_check->add_option("--identity", identity, "builtin name or .id file")->required();

    SpecOpts so;
    bool super = false;
    auto add_spec = [&](CLI::App* c) {
        c->add_option("--specialize", so.specialize, "p=PRIME");
        c->add_option("--seed", so.seed);
        c->add_option("--nonzero", so.nonzero, "comma-separated parameters kept nonzero");
    };
    auto* c_center = app.add_subcommand("center", "compute the center");
    c_center->add_option("file", file)->required();
    c_center->add_flag("--super", super, "use the supercommutator");
    add_spec(c_center);

    int trials = 10;
    auto* c_simple = app.add_subcommand("simple", "probe simplicity");
    c_simple->add_option("file", file)->required();
    c_simple->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    add_spec(c_simple);

    std::string case_id, field = "q";
    auto* c_verify = app.add_subcommand("verify-proofs", "verify the identity registry");
    c_verify->add_option("--case", case_id);
    c_verify->add_option("--field", field)->required();

    auto* c_disc = app.add_subcommand("discrepancies", "list nonzero residuals with candidates");
    c_disc->add_option("--field", field);

    for (auto* c : {c_cat, c_check, c_center, c_simple, c_verify, c_disc}) {
        auto* opt = c->add_option("--report", report, "JSON report file");
        if (c == c_verify || c == c_disc)
            opt->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Run run;
    int status = 2;
    try {
        if (c_cat->parsed()) {
            run.command = "catalog";
            status = cmd_catalog(cat, run);
        } else if (c_check->parsed()) {
            run.command = "check";
            status = cmd_check(file, identity, run);
        } else if (c_center->parsed()) {
            run.command = "center";
            status = cmd_center(file, so, super, run);
        } else if (c_simple->parsed()) {
            run.command = "simple";
            status = cmd_simple(file, trials, so, run);
        } else if (c_verify->parsed()) {
            run.command = "verify-proofs";
            status = cmd_verify(case_id, field, run);
        } else {
            run.command = "discrepancies";
            status = cmd_discrepancies(field, run);
        }
    } catch (const std::exception& e) {
        std::cerr << "algdl: " << e.what() << "\n";
        return 2;
    }

    if (!report.empty()) {
        json doc = {{"tool", "algdl"},
                    {"version", ALGDL_VERSION},
                    {"command", run.command},
                    {"inputs", run.inputs},
                    {"input_digest", run.digest},
                    {"results", run.results},
                    {"exit_status", status}};
        try {
            write_file(report, doc.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "algdl: " << e.what() << "\n";
            return 2;
        }
    }
    return status;
}
