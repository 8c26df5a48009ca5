// Acceptance run: one PASS/FAIL line per criterion, computed from scratch.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "superalg/catalog.hpp"
#include "superalg/dsl.hpp"
#include "superalg/identity.hpp"
#include "superalg/proofs.hpp"
#include "test_util.hpp"

using namespace salg;
using namespace salg::catalog;
using testutil::c;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> problems;
    std::vector<std::string> info;

    void fail(const std::string& what)
    {
        pass = false;
        problems.push_back(what);
    }
    void require(bool ok, const std::string& what)
    {
        if (!ok)
            fail(what);
    }
};

int failed_lines = 0;

void report(const std::string& id, const std::string& title, const Outcome& o, double seconds, double limit = 0)
{
    bool pass = o.pass && (limit == 0 || seconds < limit);
    failed_lines += !pass;
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << id << "  " << title << " (" << std::fixed;
    os.precision(2);
    os << seconds << " s";
    if (limit > 0)
        os << ", limit " << limit << " s";
    os << ")";
    for (auto& i : o.info)
        os << "; " << i;
    if (limit > 0 && seconds >= limit)
        os << "; over time limit";
    for (auto& p : o.problems)
        os << "; " << p;
    std::cout << os.str() << std::endl;
}

template <class F>
double timed(F&& f)
{
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome run_guarded(const std::function<void(Outcome&)>& body, double& seconds)
{
    Outcome o;
    seconds = timed([&] {
        try {
            body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
    });
    return o;
}

std::string witness_text(const SuperAlgebra& A, const IdentityReport& r)
{
    std::string s;
    for (auto i : r.witness)
        s += (s.empty() ? "" : ",") + A.basis_name(i);
    return "(" + s + ")";
}

// ---------------------------------------------------------------- 1

void alternativity(Outcome& o)
{
    auto r2 = Ring::get(2, {"mu", "beta", "gamma", "alpha"});
    auto v = [&](const char* n) { return Scalar::var(r2, n); };
    const Ring* F3 = Ring::get(3);
    auto g = Scalar::var(Ring::get(3, {"gamma"}), "gamma");
    std::vector<AlgebraPtr> algs = {make_octonion_super(v("mu"), v("beta"), v("gamma")),
                                    make_octonion_u(v("mu"), v("beta"), v("gamma"), v("alpha")), make_b12(F3),
                                    make_b42(F3), make_b_gamma(3, g)};
    uint64_t tuples = 0;
    for (auto& A : algs) {
        for (const char* s : {"alt-left", "alt-right"}) {
            auto rep = check_identity(*A, builtin_spec(s));
            tuples += rep.tuples_checked;
            o.require(rep.pass, std::string(s) + " fails on " + A->name() + " at " + witness_text(*A, rep));
        }
        auto as = check_identity(*A, builtin_spec("assoc"));
        o.require(!as.pass && as.residual && !as.residual->is_zero(), "assoc has no witness on " + A->name());
        if (!as.pass)
            o.info.push_back(A->name() + " assoc witness " + witness_text(*A, as));
    }
    o.info.insert(o.info.begin(), std::to_string(tuples) + " alternativity tuples");
}

// ---------------------------------------------------------------- 2 and 3

void bootstrap(Outcome& o)
{
    const Ring* Q = Ring::get(0);
    size_t n_ok = 0;
    for (size_t n = 1; n <= 4; ++n)
        for (size_t m = 0; n + m <= 4; ++m) {
            auto P = plus_algebra(*make_checkerboard(Q, n, m));
            auto rep = check_identity(*P, builtin_spec("super-jordan"));
            o.require(rep.pass, "super-jordan fails on " + P->name());
            n_ok += rep.pass;
        }
    std::mt19937_64 rng(2024);
    const Ring* F7 = Ring::get(7);
    std::vector<AlgebraPtr> seeds = {
        make_checkerboard(F7, 1, 1),
        make_checkerboard(F7, 2, 1),
        make_checkerboard(F7, 1, 2),
        testutil::grassmann2(F7),
        tensor_with_quadratic(*ground_field(F7), c(F7, 3), 1),
        graded_tensor(*testutil::grassmann2(F7), *tensor_with_quadratic(*ground_field(F7), c(F7, 2), 1)),
        graded_tensor(*make_checkerboard(F7, 1, 1), *tensor_with_quadratic(*ground_field(F7), c(F7, 5), 1)),
    };
    size_t r_ok = 0;
    for (int t = 0; t < 20; ++t) {
        auto A = testutil::random_rebase(*seeds[size_t(t) % seeds.size()], rng);
        if (!check_identity(*A, builtin_spec("assoc")).pass) {
            o.fail("random table " + std::to_string(t) + " is not associative");
            continue;
        }
        auto rep = check_identity(*plus_algebra(*A), builtin_spec("super-jordan"));
        o.require(rep.pass, "super-jordan fails on random table " + std::to_string(t));
        r_ok += rep.pass;
    }
    o.info.push_back(std::to_string(n_ok) + " checkerboard plus algebras, " + std::to_string(r_ok) +
                     "/20 random tables");
}

void jordan(Outcome& o, bool blocked)
{
    if (blocked) {
        o.fail("blocked: bootstrap check failed");
        return;
    }
    size_t good = 0, total = 0;
    for (uint32_t p : {0u, 5u}) {
        const Ring* F = Ring::get(p);
        auto t = Scalar::var(Ring::get(p, {"t"}), "t");
        auto sr = Ring::get(p, {"alpha1", "alpha2", "beta1"});
        auto sv = [&](const char* n) { return Scalar::var(sr, n); };
        std::vector<AlgebraPtr> algs = {make_jordan_mnm(F, 1, 1),
                                        make_jordan_mnm(F, 2, 1),
                                        make_jordan_qn(F, 2),
                                        make_jordan_pn(F, 2),
                                        make_jordan_osp(F, 1, 1),
                                        make_jordan_osp(F, 2, 1),
                                        make_jordan_dt(t),
                                        make_jordan_superform(sr, {sv("alpha1"), sv("alpha2")}, {sv("beta1")}),
                                        make_jordan_jp3(F),
                                        make_jordan_h3b42(F)};
        std::string field = p ? "GF(5)" : "Q";
        for (auto& A : algs) {
            ++total;
            auto sc = check_identity(*A, builtin_spec("supercomm"));
            auto sj = check_identity(*A, builtin_spec("super-jordan"));
            if (sc.pass && sj.pass)
                ++good;
            o.require(sc.pass, "supercomm fails on " + A->name() + " over " + field);
            o.require(sj.pass, "super-jordan fails on " + A->name() + " over " + field + " at " +
                                   witness_text(*A, sj) + ", residual " + (sj.residual ? sj.residual->str() : ""));
        }
    }
    o.info.push_back(std::to_string(good) + "/" + std::to_string(total) + " family runs pass");
    // the two characteristic-3 families in their own characteristic
    const Ring* F3 = Ring::get(3);
    bool c3 = check_identity(*make_jordan_jp3(F3), builtin_spec("super-jordan")).pass &&
              check_identity(*make_jordan_h3b42(F3), builtin_spec("super-jordan")).pass;
    o.info.push_back(std::string("JP3 and H3(B(4,2)) over GF(3): ") + (c3 ? "pass" : "fail"));
}

// ---------------------------------------------------------------- 4 and 5

const std::vector<std::string> must_verify = {"assoc-case2", "alt-3",    "alt-4",    "alt-5a",  "jordan-a",
                                              "jordan-e",    "jordan-f", "jordan-g", "jordan-h"};
const std::vector<std::string> remaining = {"alt-1a", "alt-1b", "alt-5b", "jordan-b", "jordan-c", "jordan-d"};

std::map<std::string, proofs::CaseReport> case_reports;

size_t nonzero(const proofs::CaseReport& r)
{
    size_t n = 0;
    for (auto& x : r.records)
        n += x.status != proofs::Status::verified;
    return n;
}

void proofs_zero(Outcome& o)
{
    for (auto& id : must_verify) {
        const auto& c = proofs::find_case(id);
        auto r = proofs::verify_case(c, c.fields.front());
        size_t bad = nonzero(r);
        o.require(bad == 0, id + " " + std::to_string(bad) + "/" + std::to_string(r.records.size()) + " nonzero");
        case_reports[id] = std::move(r);
    }
}

bool same_report(const proofs::CaseReport& a, const proofs::CaseReport& b)
{
    if (a.records.size() != b.records.size() || a.emendations_applied != b.emendations_applied)
        return false;
    for (size_t i = 0; i < a.records.size(); ++i) {
        auto &x = a.records[i], &y = b.records[i];
        if (x.label != y.label || x.instance != y.instance || x.status != y.status || x.residual != y.residual ||
            x.candidates.size() != y.candidates.size())
            return false;
        for (size_t k = 0; k < x.candidates.size(); ++k)
            if (x.candidates[k].text != y.candidates[k].text || x.candidates[k].residual != y.candidates[k].residual)
                return false;
    }
    return true;
}

void proofs_deterministic(Outcome& o)
{
    size_t records = 0;
    for (auto& id : remaining) {
        const auto& c = proofs::find_case(id);
        auto a = proofs::verify_case(c, c.fields.front());
        auto b = proofs::verify_case(c, c.fields.front());
        o.require(same_report(a, b), id + " report differs between runs");
        o.require(!a.records.empty(), id + " has no records");
        records += a.records.size();
        o.info.push_back(id + " " + std::to_string(nonzero(a)) + "/" + std::to_string(a.records.size()) + " nonzero");
        case_reports[id] = std::move(a);
    }
}

void proofs_discrepancies(Outcome& o)
{
    std::set<std::tuple<std::string, std::string, std::string>> listed;
    size_t entries = 0;
    for (auto& d : proofs::discrepancy_report("q")) {
        ++entries;
        listed.insert({d.case_id, d.instance, d.label});
        bool zero = false;
        for (auto& cand : d.candidates)
            zero = zero || cand.zero;
        o.require(zero, d.case_id + " " + d.instance + " " + d.label + " has no zero-residual candidate");
    }
    for (auto& [id, r] : case_reports)
        for (auto& x : r.records)
            if (x.status != proofs::Status::verified)
                o.require(listed.count({id, x.instance, x.label}) > 0,
                          id + " " + x.label + " missing from the discrepancy report");
    o.info.push_back(std::to_string(entries) + " entries, each with a zero-residual candidate");
}

void proofs_totals(Outcome& o)
{
    size_t total = 0;
    for (auto& c : proofs::list_cases())
        total += c.identities;
    o.require(total >= 40, "only " + std::to_string(total) + " identity records");
    o.info.push_back(std::to_string(total) + " identity records");
}

void specializations(Outcome& o)
{
    size_t checked = 0, failures = 0;
    for (auto& c : proofs::registry()) {
        const auto& f = c.fields.front();
        auto r = proofs::verify_case(c, f);
        size_t k = 0;
        for (size_t i = 0; i < c.instances.size(); ++i)
            for (size_t j = 0; j < c.instances[i].relations.size(); ++j, ++k) {
                if (r.records[k].status != proofs::Status::verified)
                    continue;
                auto sc = proofs::check_specializations(c, f, i, j, 50, 0x5eed + k);
                ++checked;
                failures += sc.failures;
                o.require(sc.failures == 0, c.id + " " + r.records[k].label + " fails at " +
                                                std::to_string(sc.failures) + " points");
            }
    }
    o.info.push_back(std::to_string(checked) + " verified identities x 50 points, " + std::to_string(failures) +
                     " nonzero");
}

// ---------------------------------------------------------------- 6 and 7

AlgebraPtr octonion_at(uint64_t seed, bool graded)
{
    auto r = Ring::get(2, {"mu", "beta", "gamma"});
    auto v = [&](const char* n) { return Scalar::var(r, n); };
    auto O = make_octonion(v("mu"), v("beta"), v("gamma"), graded);
    return specialize_algebra(*O, make_specialization(r, seed, 2, {"mu", "beta", "gamma"}));
}

void centers(Outcome& o)
{
    const Ring* Q = Ring::get(0);
    const Ring* F3 = Ring::get(3);
    std::vector<AlgebraPtr> algs = {make_b12(F3), make_b42(F3)};
    for (size_t n = 1; n <= 4; ++n)
        for (size_t m = 0; n + m <= 4; ++m)
            algs.push_back(make_checkerboard(Q, n, m));
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        algs.push_back(octonion_at(seed, true));
        algs.push_back(octonion_at(seed, false));
    }
    for (auto& A : algs) {
        auto z = center(*A);
        auto dims = std::to_string(z.even_part.size()) + "|" + std::to_string(z.odd_part.size());
        o.require(z.even_part.size() == 1 && z.odd_part.empty(), A->name() + " center " + dims);
        // same answer a second time
        auto z2 = center(*A);
        o.require(z2.even_part.size() == z.even_part.size() && z2.odd_part.size() == z.odd_part.size(),
                  A->name() + " center unstable");
    }
    o.info.push_back(std::to_string(algs.size()) + " algebras with center dims 1|0");
}

void simplicity(Outcome& o)
{
    const Ring* F3 = Ring::get(3);
    const Ring* F5 = Ring::get(5);
    std::vector<AlgebraPtr> simple = {make_b12(F3), make_b42(F3), make_jordan_dt(c(F5, 2)),
                                      make_checkerboard(F5, 1, 1), octonion_at(1, true)};
    for (auto& A : simple) {
        auto pr = simplicity_probe(*A, 10, 1);
        o.require(pr.verdict == Verdict::simple, A->name() + " verdict " + to_string(pr.verdict));
        o.info.push_back(A->name() + " " + to_string(pr.verdict) + (pr.certified ? " (certified)" : ""));
    }
    TableBuilder kk(F5, 2);
    kk.add(0, 0, 0, 1);
    kk.add(1, 1, 1, 1);
    auto KK = SuperAlgebra::make("k+k", F5, {"e", "f"}, {0, 0}, kk.build(), std::vector<Scalar>{c(F5, 1), c(F5, 1)});
    auto T = SuperAlgebra::make("trivial2", F5, {"a", "b"}, {0, 0}, TableBuilder(F5, 2).build());
    for (auto& A : {KK, T}) {
        auto pr = simplicity_probe(*A, 10, 1);
        bool ok = pr.verdict == Verdict::ideal_found && pr.ideal && pr.ideal->is_proper &&
                  !pr.ideal->closure_basis.empty() && pr.ideal->closure_basis.size() < A->dim();
        o.require(ok, A->name() + " has no certified proper ideal");
        if (ok)
            o.info.push_back(A->name() + " ideal of dim " + std::to_string(pr.ideal->closure_basis.size()));
    }
}

// ---------------------------------------------------------------- 8

void dsl_cli(Outcome& o)
{
    size_t n = 0;
    for (auto& f : families()) {
        auto A = build({f, {}, {}, -1});
        auto text = serialize_algebra(*A);
        auto B = parse_algebra(text);
        o.require(same_structure(*A, *B) && serialize_algebra(*B) == text, "round trip fails for " + f);
        ++n;
    }
    o.info.push_back(std::to_string(n) + " catalog exports round-trip");
    std::string cmd = std::string("\"") + ALGDL_PYTHON + "\" \"" + ALGDL_CLI_TEST + "\" \"" + ALGDL_BIN + "\" \"" +
                      ALGDL_SCHEMA + "\" 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        o.fail("cannot start the CLI suite");
        return;
    }
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe))
        out += buf;
    int rc = pclose(pipe);
    std::string last = out;
    while (!last.empty() && last.back() == '\n')
        last.pop_back();
    last = last.substr(last.find_last_of('\n') + 1);
    o.require(rc == 0, "CLI suite: " + out);
    o.info.push_back(last);
}

} // namespace

int main()
{
    double s = 0;
    auto t0 = Clock::now();

    auto o1 = run_guarded(alternativity, s);
    report("1 ", "alternativity", o1, s, 30);

    double s3 = 0;
    auto o3 = run_guarded(bootstrap, s3);
    auto o2 = run_guarded([&](Outcome& o) { jordan(o, !o3.pass); }, s);
    report("2 ", "Jordan families", o2, s, 120);
    report("3 ", "bootstrap soundness", o3, s3);

    double proofs_time = 0;
    auto o4a = run_guarded(proofs_zero, s);
    proofs_time += s;
    report("4a", "proof cases with all-zero residuals", o4a, s);
    auto o4b = run_guarded(proofs_deterministic, s);
    proofs_time += s;
    report("4b", "remaining proof cases report deterministically", o4b, s);
    auto o4c = run_guarded(proofs_discrepancies, s);
    proofs_time += s;
    report("4c", "nonzero residuals have zeroing candidates", o4c, s);
    auto o4d = run_guarded(proofs_totals, s);
    proofs_time += s;
    report("4d", "identity record total and runtime", o4d, proofs_time, 600);

    auto o5 = run_guarded(specializations, s);
    report("5 ", "specialization consistency", o5, s);
    auto o6 = run_guarded(centers, s);
    report("6 ", "centers", o6, s);
    auto o7 = run_guarded(simplicity, s);
    report("7 ", "simplicity", o7, s);
    auto o8 = run_guarded(dsl_cli, s);
    report("8 ", "DSL round trip, report schema, exit codes", o8, s);

    double total = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (failed_lines ? "FAILED " : "ALL PASSED ") << failed_lines << " of 11 lines failed, " << total
              << " s total" << std::endl;
    return failed_lines ? 1 : 0;
}
