#include "superalg/proofs.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "superalg/embedded.hpp"
#include "superalg/linalg.hpp"

namespace salg::proofs {

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

// ---------------------------------------------------------------- expressions

struct ExprParser {
    const std::string& s;
    size_t i = 0;

    void ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done()
    {
        ws();
        return i >= s.size();
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error("expression column " + std::to_string(i + 1) + ": " + msg);
    }

    std::string word()
    {
        size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' && s[i] != ')')
            ++i;
        return s.substr(b, i - b);
    }

    Expr parse()
    {
        ws();
        if (i >= s.size())
            fail("unexpected end");
        Expr e;
        if (s[i] == '[') {
            size_t close = s.find(']', i);
            if (close == std::string::npos)
                fail("unclosed '['");
            e.kind = Expr::scalar;
            e.text = trim(s.substr(i + 1, close - i - 1));
            if (e.text.empty())
                fail("empty scalar");
            i = close + 1;
            return e;
        }
        if (s[i] == ')')
            fail("unexpected ')'");
        if (s[i] != '(') {
            e.kind = Expr::name;
            e.text = word();
            return e;
        }
        ++i;
        ws();
        e.kind = Expr::op;
        e.text = word();
        static const std::set<std::string> ops = {"*", "o", "+", "-", "even", "odd"};
        if (!ops.count(e.text))
            fail("unknown operator '" + e.text + "'");
        while (true) {
            ws();
            if (i >= s.size())
                fail("missing ')'");
            if (s[i] == ')') {
                ++i;
                break;
            }
            e.args.push_back(parse());
        }
        size_t n = e.args.size();
        bool ok = (e.text == "*" || e.text == "+") ? n >= 1
                  : e.text == "o"                  ? n == 2
                  : e.text == "-"                  ? n >= 1
                                                   : n == 1;
        if (!ok)
            fail("wrong number of operands for '" + e.text + "'");
        return e;
    }
};

std::vector<Expr> parse_exprs(const std::string& text)
{
    ExprParser p{text};
    std::vector<Expr> out;
    while (!p.done())
        out.push_back(p.parse());
    return out;
}

// split "LHS = RHS" at the '=' outside brackets
std::pair<std::string, std::string> split_equation(const std::string& body)
{
    int depth = 0;
    bool in_scalar = false;
    for (size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        if (ch == '[')
            in_scalar = true;
        else if (ch == ']')
            in_scalar = false;
        else if (!in_scalar && ch == '(')
            ++depth;
        else if (!in_scalar && ch == ')')
            --depth;
        else if (!in_scalar && depth == 0 && ch == '=')
            return {body.substr(0, i), body.substr(i + 1)};
    }
    throw Error("missing '=' in relation");
}

Expr single_expr(const std::string& text)
{
    auto v = parse_exprs(text);
    if (v.size() != 1)
        throw Error("expected one expression, found " + std::to_string(v.size()));
    return v[0];
}

// ---------------------------------------------------------------- evaluation

struct Val {
    bool is_scalar = false;
    Scalar s;
    Element e;
};

using AtomFn = std::function<Scalar(const std::string&)>;

class Evaluator {
public:
    Evaluator(const SuperAlgebra& A, AtomFn atom) : A_(A), atom_(std::move(atom)) {}

    void define(const std::string& name, const Expr& e) { env_[name] = eval(e); }

    Val eval(const Expr& e) const
    {
        switch (e.kind) {
        case Expr::scalar: {
            auto it = atoms_.find(e.text);
            if (it == atoms_.end())
                it = atoms_.emplace(e.text, atom_(e.text)).first;
            return {true, it->second, {}};
        }
        case Expr::name: {
            auto it = env_.find(e.text);
            if (it != env_.end())
                return it->second;
            int k = A_.index_of(e.text);
            if (k < 0)
                throw Error("undeclared name '" + e.text + "'");
            return {false, {}, A_.basis(size_t(k))};
        }
        case Expr::op:
            break;
        }
        const std::string& op = e.text;
        std::vector<Val> v;
        for (auto& a : e.args)
            v.push_back(eval(a));
        if (op == "*") {
            Val acc = v[0];
            for (size_t k = 1; k < v.size(); ++k) {
                const Val& b = v[k];
                if (acc.is_scalar && b.is_scalar)
                    acc.s = acc.s * b.s;
                else if (acc.is_scalar)
                    acc = {false, {}, b.e.scaled(acc.s)};
                else if (b.is_scalar)
                    acc.e = acc.e.scaled(b.s);
                else
                    acc.e = acc.e * b.e;
            }
            return acc;
        }
        if (op == "o") {
            Element x = element(v[0]), y = element(v[1]);
            return {false, {}, x * y + y * x};
        }
        if (op == "+" || op == "-") {
            bool all_scalar = std::all_of(v.begin(), v.end(), [](const Val& x) { return x.is_scalar; });
            bool minus = op == "-";
            if (all_scalar) {
                Scalar s = v[0].s;
                if (minus && v.size() == 1)
                    return {true, -s, {}};
                for (size_t k = 1; k < v.size(); ++k)
                    s = minus ? s - v[k].s : s + v[k].s;
                return {true, s, {}};
            }
            Element x = element(v[0]);
            if (minus && v.size() == 1)
                return {false, {}, -x};
            for (size_t k = 1; k < v.size(); ++k)
                x = minus ? x - element(v[k]) : x + element(v[k]);
            return {false, {}, x};
        }
        if (op == "even")
            return {false, {}, element(v[0]).even()};
        return {false, {}, element(v[0]).odd()};
    }

    Element element(const Val& v) const
    {
        if (!v.is_scalar)
            return v.e;
        if (!A_.has_unit())
            throw Error("scalar used as an element, but " + A_.name() + " has no unit");
        return A_.unit().scaled(v.s);
    }

    const SuperAlgebra& algebra() const { return A_; }

private:
    const SuperAlgebra& A_;
    AtomFn atom_;
    std::map<std::string, Val> env_;
    mutable std::map<std::string, Scalar> atoms_;
};

// x modulo the span of `span` (constant coordinates)
Element reduce_mod_span(const Element& x, const std::vector<Element>& span)
{
    const Ring* r = x.algebra()->ring();
    std::vector<Element> rows;
    std::vector<size_t> piv;
    for (Element v : span) {
        for (size_t k = 0; k < rows.size(); ++k)
            if (!v[piv[k]].is_zero())
                v = v - rows[k].scaled(v[piv[k]]);
        size_t p = 0;
        while (p < v.dim() && v[p].is_zero())
            ++p;
        if (p == v.dim())
            continue;
        if (!v[p].is_constant())
            throw Error("span element with non-constant coordinates");
        Scalar inv = divide_exact(Scalar::constant(r, 1), v[p]);
        v = v.scaled(inv);
        for (size_t k = 0; k < rows.size(); ++k)
            if (!rows[k][p].is_zero())
                rows[k] = rows[k] - v.scaled(rows[k][p]);
        rows.push_back(v);
        piv.push_back(p);
    }
    Element y = x;
    for (size_t k = 0; k < rows.size(); ++k)
        if (!y[piv[k]].is_zero())
            y = y - rows[k].scaled(y[piv[k]]);
    return y;
}

// ---------------------------------------------------------------- instance setup

struct Setup {
    const Ring* ring = nullptr;
    AlgebraPtr A;
    std::map<std::string, Scalar> bindings;
};

Setup make_setup(const Instance& in, uint32_t ch)
{
    Setup s;
    catalog::CatalogKey key = in.key;
    key.characteristic = long(ch);
    AlgebraPtr A0 = catalog::build(key);
    if (in.matrix)
        A0 = checkerboard_matrix_super(*A0, in.matrix, 0);
    std::vector<std::string> params = A0->ring()->params();
    for (auto& n : in.symbols)
        if (std::find(params.begin(), params.end(), n) == params.end())
            params.push_back(n);
    s.ring = Ring::get(ch, params);
    s.A = embed_algebra(*A0, s.ring);
    for (auto& [name, value] : in.subst)
        s.bindings[name] = Scalar::parse(s.ring, value);
    return s;
}

Scalar symbolic_atom(const Setup& s, const std::string& text)
{
    Scalar v = Scalar::parse(s.ring, text);
    return s.bindings.empty() ? v : substitute(v, s.bindings);
}

Evaluator symbolic_evaluator(const Setup& s, const Instance& in)
{
    Evaluator ev(*s.A, [&s](const std::string& t) { return symbolic_atom(s, t); });
    for (auto& [name, e] : in.defs)
        ev.define(name, e);
    return ev;
}

Element residual_of(const Evaluator& ev, const Relation& r)
{
    if (!r.member)
        return ev.element(ev.eval(r.lhs)) - ev.element(ev.eval(r.rhs));
    std::vector<Element> span;
    for (auto& e : r.span)
        span.push_back(ev.element(ev.eval(e)));
    return reduce_mod_span(ev.element(ev.eval(r.lhs)), span);
}

// ---------------------------------------------------------------- refit

struct SideTerm {
    Scalar coef; // constant; sign already folded in for the right side
    Expr term;
    bool left = true;
};

void flatten(const Expr& e, const Scalar& c, bool left, const Setup& s, std::vector<SideTerm>& out)
{
    if (e.kind == Expr::op && e.text == "+") {
        for (auto& a : e.args)
            flatten(a, c, left, s, out);
        return;
    }
    if (e.kind == Expr::op && e.text == "-") {
        if (e.args.size() == 1) {
            flatten(e.args[0], -c, left, s, out);
            return;
        }
        flatten(e.args[0], c, left, s, out);
        for (size_t k = 1; k < e.args.size(); ++k)
            flatten(e.args[k], -c, left, s, out);
        return;
    }
    if (e.kind == Expr::op && e.text == "*" && e.args.size() == 2) {
        for (int side = 0; side < 2; ++side) {
            const Expr& k = e.args[size_t(side)];
            if (k.kind != Expr::scalar)
                continue;
            Scalar v = Scalar::parse(s.ring, k.text);
            if (v.is_constant() && !v.is_zero()) {
                flatten(e.args[size_t(1 - side)], c * v, left, s, out);
                return;
            }
        }
    }
    out.push_back({c, e, left});
}

std::string coef_text(const Scalar& c)
{
    return c.str();
}

std::string side_text(const std::vector<SideTerm>& terms, const std::vector<Scalar>& coefs, bool left)
{
    std::vector<std::string> parts;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].left != left)
            continue;
        Scalar c = left ? coefs[i] : -coefs[i];
        std::string t = terms[i].term.str();
        if (c.is_one())
            parts.push_back(t);
        else if ((-c).is_one())
            parts.push_back("(- " + t + ")");
        else
            parts.push_back("(* [" + coef_text(c) + "] " + t + ")");
    }
    if (parts.empty())
        return "[0]";
    if (parts.size() == 1)
        return parts[0];
    std::string out = "(+";
    for (auto& p : parts)
        out += " " + p;
    return out + ")";
}

// Smallest set of top-level coefficients to change so that the relation
// holds, keeping every coefficient nonzero.
std::optional<Candidate> refit(const Setup& s, const Evaluator& ev, const Relation& r)
{
    std::vector<SideTerm> terms;
    const Scalar one = Scalar::constant(s.ring, 1);
    flatten(r.lhs, one, true, s, terms);
    flatten(r.rhs, -one, false, s, terms);
    size_t n = terms.size();
    if (n == 0 || n > 12)
        return std::nullopt;
    std::vector<Element> vals;
    for (auto& t : terms)
        vals.push_back(ev.element(ev.eval(t.term)));

    return la::with_field(s.ring->base(), [&](auto F) -> std::optional<Candidate> {
        using T = typename decltype(F)::T;
        const Ring* base = s.ring->base();
        // coordinates over (basis index, monomial)
        std::map<std::pair<size_t, std::vector<uint16_t>>, size_t> keys;
        std::vector<std::map<size_t, T>> vecs(n);
        auto key_of = [&](size_t k, const Exps& e) {
            auto kk = std::make_pair(k, std::vector<uint16_t>(e.begin(), e.end()));
            auto it = keys.find(kk);
            if (it == keys.end())
                it = keys.emplace(kk, keys.size()).first;
            return it->second;
        };
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < vals[i].dim(); ++k) {
                const Scalar& c = vals[i][k];
                if (base->characteristic() == 0) {
                    for (auto& t : c.qterms())
                        vecs[i][key_of(k, t.e)] = F.from_scalar(Scalar::rational(base, t.c));
                } else {
                    for (auto& t : c.pterms())
                        vecs[i][key_of(k, t.e)] = F.from_scalar(Scalar::constant(base, long(t.c)));
                }
            }
        std::vector<T> orig;
        for (auto& t : terms)
            orig.push_back(F.from_scalar(t.coef));
        size_t m = keys.size();
        for (size_t size = 1; size <= n; ++size) {
            std::vector<bool> pick(n, false);
            std::fill(pick.begin(), pick.begin() + long(size), true);
            do {
                std::vector<size_t> S;
                for (size_t i = 0; i < n; ++i)
                    if (pick[i])
                        S.push_back(i);
                std::vector<la::Vec<decltype(F)>> A(m, la::Vec<decltype(F)>(S.size(), F.from_int(0)));
                la::Vec<decltype(F)> b(m, F.from_int(0));
                for (size_t i = 0; i < n; ++i) {
                    auto pos = std::find(S.begin(), S.end(), i);
                    for (auto& [key, v] : vecs[i]) {
                        if (pos != S.end())
                            A[key][size_t(pos - S.begin())] = v;
                        else
                            b[key] = F.sub(b[key], F.mul(orig[i], v));
                    }
                }
                auto sol = la::solve(F, A, b, S.size());
                if (sol) {
                    bool changed = false, nonzero = true;
                    for (size_t j = 0; j < S.size(); ++j) {
                        nonzero = nonzero && !F.zero((*sol)[j]);
                        changed = changed || (*sol)[j] != orig[S[j]];
                    }
                    if (changed && nonzero) {
                        std::vector<Scalar> coefs;
                        for (size_t i = 0; i < n; ++i)
                            coefs.push_back(F.to_scalar(s.ring, orig[i]));
                        Candidate c;
                        c.source = "refit";
                        for (size_t j = 0; j < S.size(); ++j) {
                            Scalar from = coefs[S[j]];
                            coefs[S[j]] = F.to_scalar(s.ring, (*sol)[j]);
                            bool left = terms[S[j]].left;
                            if (!c.note.empty())
                                c.note += "; ";
                            c.note += "coefficient of " + terms[S[j]].term.str() + ": " +
                                      coef_text(left ? from : -from) + " -> " +
                                      coef_text(left ? coefs[S[j]] : -coefs[S[j]]);
                        }
                        c.text = side_text(terms, coefs, true) + " = " + side_text(terms, coefs, false);
                        return c;
                    }
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        return std::nullopt;
    });
}

Candidate evaluate_candidate(const Evaluator& ev, const std::string& source, const std::string& text,
                             const std::string& note)
{
    auto [l, r] = split_equation(text);
    Relation rel;
    rel.lhs = single_expr(l);
    rel.rhs = single_expr(r);
    Element res = residual_of(ev, rel);
    Candidate c;
    c.source = source;
    c.text = text;
    c.note = note;
    c.residual = res.str();
    c.zero = res.is_zero();
    return c;
}

bool has_field(const ProofCase& c, const std::string& f)
{
    return std::find(c.fields.begin(), c.fields.end(), f) != c.fields.end();
}

Expr expand(const Expr& e, const std::map<std::string, Expr>& defs, const Setup& s)
{
    if (e.kind == Expr::name) {
        auto it = defs.find(e.text);
        return it == defs.end() ? e : it->second;
    }
    if (e.kind == Expr::scalar) {
        Expr out = e;
        out.text = symbolic_atom(s, e.text).str();
        return out;
    }
    Expr out = e;
    for (auto& a : out.args)
        a = expand(a, defs, s);
    return out;
}

} // namespace

// ---------------------------------------------------------------- Expr

std::string Expr::str() const
{
    if (kind == name)
        return text;
    if (kind == scalar)
        return "[" + text + "]";
    std::string out = "(" + text;
    for (auto& a : args)
        out += " " + a.str();
    return out + ")";
}

Expr parse_expr(const std::string& text)
{
    return single_expr(text);
}

// ---------------------------------------------------------------- registry

size_t ProofCase::identity_count() const
{
    size_t n = 0;
    for (auto& in : instances)
        n += in.relations.size();
    return n;
}

ProofCase parse_case(const std::string& text)
{
    ProofCase c;
    std::istringstream in(text);
    std::string raw;
    size_t line = 0;
    Instance* cur = nullptr;
    Emendation* last_emend = nullptr;
    std::set<std::string> defined;
    auto need_instance = [&](const std::string& kw) {
        if (!cur)
            throw RegistryError("'" + kw + "' outside an instance", line);
    };
    auto labelled = [&](const std::string& rest, const std::string& kw) {
        size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw RegistryError("'" + kw + "' needs 'LABEL : ...'", line);
        std::string label = trim(rest.substr(0, colon));
        if (label.empty())
            throw RegistryError("empty label", line);
        return std::make_pair(label, trim(rest.substr(colon + 1)));
    };
    while (std::getline(in, raw)) {
        ++line;
        std::string l = raw;
        if (auto h = l.find('#'); h != std::string::npos)
            l = l.substr(0, h);
        l = trim(l);
        if (l.empty())
            continue;
        size_t sp = l.find_first_of(" \t");
        std::string kw = l.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(l.substr(sp));
        Emendation* prev_emend = last_emend;
        last_emend = nullptr;
        try {
            if (kw == "case") {
                if (!c.id.empty())
                    throw RegistryError("second 'case' statement", line);
                c.id = rest;
            } else if (kw == "fields") {
                c.fields = words(rest);
                for (auto& f : c.fields)
                    field_characteristic(f);
            } else if (kw == "note") {
                if (prev_emend)
                    prev_emend->note = rest;
                else
                    c.notes.push_back(rest);
            } else if (kw == "instance") {
                c.instances.push_back({});
                cur = &c.instances.back();
                cur->label = rest;
                defined.clear();
            } else if (kw == "algebra") {
                need_instance(kw);
                cur->key.family = rest;
            } else if (kw == "size" || kw == "param") {
                need_instance(kw);
                size_t eq = rest.find('=');
                if (eq == std::string::npos)
                    throw RegistryError("expected NAME=VALUE", line);
                std::string k = trim(rest.substr(0, eq)), v = trim(rest.substr(eq + 1));
                if (kw == "size")
                    cur->key.sizes[k] = std::stol(v);
                else
                    cur->key.params[k] = v;
            } else if (kw == "matrix") {
                need_instance(kw);
                cur->matrix = size_t(std::stoul(rest));
            } else if (kw == "symbols") {
                need_instance(kw);
                for (auto& w : words(rest))
                    cur->symbols.push_back(w);
            } else if (kw == "subst") {
                need_instance(kw);
                size_t eq = rest.find('=');
                if (eq == std::string::npos)
                    throw RegistryError("expected 'subst NAME = SCALAR'", line);
                std::string name = trim(rest.substr(0, eq));
                if (std::find(cur->symbols.begin(), cur->symbols.end(), name) == cur->symbols.end())
                    throw RegistryError("substituted symbol '" + name + "' is not declared", line);
                cur->subst.push_back({name, trim(rest.substr(eq + 1))});
            } else if (kw == "nonzero") {
                need_instance(kw);
                for (auto& w : words(rest))
                    cur->nonzero.push_back(w);
            } else if (kw == "def") {
                need_instance(kw);
                size_t eq = rest.find('=');
                if (eq == std::string::npos)
                    throw RegistryError("expected 'def NAME = EXPR'", line);
                std::string name = trim(rest.substr(0, eq));
                if (!defined.insert(name).second)
                    throw RegistryError("'" + name + "' defined twice", line);
                cur->defs.push_back({name, single_expr(rest.substr(eq + 1))});
            } else if (kw == "id" || kw == "member") {
                need_instance(kw);
                auto [label, body] = labelled(rest, kw);
                Relation r;
                r.label = label;
                r.text = body;
                r.line = line;
                if (kw == "id") {
                    auto [lhs, rhs] = split_equation(body);
                    r.lhs = single_expr(lhs);
                    r.rhs = single_expr(rhs);
                } else {
                    r.member = true;
                    auto v = parse_exprs(body);
                    if (v.size() < 3 || v[1].kind != Expr::name || v[1].text != "in")
                        throw RegistryError("expected 'member LABEL : EXPR in EXPR...'", line);
                    r.lhs = v[0];
                    r.span.assign(v.begin() + 2, v.end());
                }
                for (auto& other : cur->relations)
                    if (other.label == r.label)
                        throw RegistryError("duplicate label '" + r.label + "'", line);
                cur->relations.push_back(std::move(r));
            } else if (kw == "emend") {
                need_instance(kw);
                auto [label, body] = labelled(rest, kw);
                Emendation e;
                e.label = label;
                e.text = body;
                auto [lhs, rhs] = split_equation(body);
                e.lhs = single_expr(lhs);
                e.rhs = single_expr(rhs);
                bool known = false;
                for (auto& r : cur->relations)
                    known = known || r.label == label;
                if (!known)
                    throw RegistryError("emendation for unknown label '" + label + "'", line);
                cur->emendations.push_back(std::move(e));
                last_emend = &cur->emendations.back();
            } else {
                throw RegistryError("unknown statement '" + kw + "'", line);
            }
        } catch (const RegistryError&) {
            throw;
        } catch (const std::exception& e) {
            throw RegistryError(e.what(), line);
        }
    }
    if (c.id.empty())
        throw RegistryError("missing 'case' statement", line);
    if (c.fields.empty())
        throw RegistryError("missing 'fields' statement", line);
    for (auto& inst : c.instances)
        if (inst.key.family.empty())
            throw RegistryError("instance without 'algebra'", line);
    return c;
}

const std::vector<ProofCase>& registry()
{
    static const std::vector<ProofCase> cases = [] {
        std::vector<ProofCase> out;
        for (auto& [path, text] : embedded_files()) {
            if (path.rfind("proofs/", 0) != 0 || path.size() < 6 || path.substr(path.size() - 6) != ".proof")
                continue;
            try {
                out.push_back(parse_case(text));
            } catch (const Error& e) {
                throw Error(path + ": " + e.what());
            }
        }
        std::sort(out.begin(), out.end(), [](const ProofCase& a, const ProofCase& b) { return a.id < b.id; });
        return out;
    }();
    return cases;
}

const ProofCase& find_case(const std::string& id)
{
    for (auto& c : registry())
        if (c.id == id)
            return c;
    throw Error("unknown proof case '" + id + "'");
}

std::vector<CaseSummary> list_cases()
{
    std::vector<CaseSummary> out;
    for (auto& c : registry())
        out.push_back({c.id, c.identity_count(), c.notes.empty() ? "" : c.notes[0]});
    return out;
}

uint32_t field_characteristic(const std::string& field)
{
    if (field == "q")
        return 0;
    if (field == "gf2")
        return 2;
    if (field == "gf3")
        return 3;
    if (field == "gf5")
        return 5;
    throw Error("unknown field '" + field + "' (expected gf2, gf3, gf5 or q)");
}

std::string to_string(Status s)
{
    return s == Status::verified ? "verified" : "nonzero residual";
}

bool CaseReport::all_verified() const
{
    return std::all_of(records.begin(), records.end(), [](const IdentityRecord& r) { return r.status == Status::verified; });
}

std::string field_for(const ProofCase& c, const std::string& field)
{
    field_characteristic(field);
    return has_field(c, field) ? field : c.fields.front();
}

CaseReport verify_case(const ProofCase& c, const std::string& field)
{
    uint32_t ch = field_characteristic(field);
    if (!has_field(c, field)) {
        std::string allowed;
        for (auto& f : c.fields)
            allowed += (allowed.empty() ? "" : ", ") + f;
        throw Error("case " + c.id + " cannot run over " + field + " (allowed: " + allowed + ")");
    }
    auto t0 = std::chrono::steady_clock::now();
    CaseReport rep;
    rep.id = c.id;
    rep.field = field;
    for (auto& in : c.instances) {
        Setup s = make_setup(in, ch);
        Evaluator ev = symbolic_evaluator(s, in);
        for (auto& r : in.relations) {
            IdentityRecord rec;
            rec.instance = in.label;
            rec.label = r.label;
            rec.kind = r.member ? "member" : "identity";
            rec.text = r.text;
            Element res = residual_of(ev, r);
            rec.residual = res.str();
            rec.status = res.is_zero() ? Status::verified : Status::nonzero_residual;
            if (!res.is_zero() && !r.member) {
                bool curated = false;
                for (auto& e : in.emendations)
                    if (e.label == r.label) {
                        rec.candidates.push_back(evaluate_candidate(ev, "registry", e.text, e.note));
                        curated = true;
                    }
                if (curated)
                    rep.emendations_applied.push_back((in.label.empty() ? "" : in.label + " ") + r.label);
                if (auto fit = refit(s, ev, r)) {
                    Candidate cand = evaluate_candidate(ev, "refit", fit->text, fit->note);
                    rec.candidates.push_back(cand);
                }
            }
            rep.records.push_back(std::move(rec));
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CaseReport verify_case(const std::string& id, const std::string& field)
{
    return verify_case(find_case(id), field);
}

std::vector<Discrepancy> discrepancies(const std::vector<CaseReport>& reports)
{
    std::vector<Discrepancy> out;
    for (auto& rep : reports)
        for (auto& r : rep.records)
            if (r.status != Status::verified)
                out.push_back({rep.id, r.instance, r.label, r.text, r.residual, r.candidates});
    return out;
}

std::vector<Discrepancy> discrepancy_report(const std::string& field)
{
    std::vector<CaseReport> reps;
    for (auto& c : registry())
        reps.push_back(verify_case(c, field_for(c, field)));
    return discrepancies(reps);
}

SpecializationCheck check_specializations(const ProofCase& c, const std::string& field, size_t instance,
                                          size_t relation, size_t trials, uint64_t seed)
{
    uint32_t ch = field_characteristic(field);
    const Instance& in = c.instances.at(instance);
    const Relation& rel = in.relations.at(relation);
    Setup s = make_setup(in, ch);
    SpecializationCheck out;
    out.p = ch == 0 ? 5 : ch;
    out.trials = trials;
    for (size_t t = 0; t < trials; ++t) {
        Specialization sp = make_specialization(s.ring, seed + t, out.p, in.nonzero);
        // localized symbols take the value of what they stand for
        for (auto& [name, value] : s.bindings) {
            auto it = std::find(sp.names.begin(), sp.names.end(), name);
            sp.values[size_t(it - sp.names.begin())] = value.evaluate(sp);
        }
        AlgebraPtr As = specialize_algebra(*s.A, sp);
        const Ring* target = As->ring();
        Evaluator ev(*As, [&](const std::string& text) {
            return Scalar::constant(target, long(Scalar::parse(s.ring, text).evaluate(sp)));
        });
        for (auto& [name, e] : in.defs)
            ev.define(name, e);
        if (!residual_of(ev, rel).is_zero())
            ++out.failures;
    }
    return out;
}

std::vector<Expr> expanded_relations(const ProofCase& c, size_t instance)
{
    const Instance& in = c.instances.at(instance);
    Setup s = make_setup(in, field_characteristic(c.fields.front()));
    std::map<std::string, Expr> defs;
    for (auto& [name, e] : in.defs)
        defs[name] = expand(e, defs, s);
    std::vector<Expr> out;
    for (auto& r : in.relations) {
        out.push_back(expand(r.lhs, defs, s));
        if (r.member)
            for (auto& e : r.span)
                out.push_back(expand(e, defs, s));
        else
            out.push_back(expand(r.rhs, defs, s));
    }
    return out;
}

} // namespace salg::proofs
