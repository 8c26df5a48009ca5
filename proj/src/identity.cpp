#include "superalg/identity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "numalg.hpp"
#include "superalg/embedded.hpp"
#include "superalg/linalg.hpp"

namespace salg {

// ---------------------------------------------------------------- bracketing

namespace {

struct Tokens {
    std::string s;
    size_t i = 0;
    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eof()
    {
        skip();
        return i >= s.size();
    }
    char peek()
    {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    long number()
    {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i)
            throw Error("expected a number at column " + std::to_string(i + 1) + " in '" + s + "'");
        long v = std::stol(s.substr(i, j - i));
        i = j;
        return v;
    }
    void expect(char c)
    {
        if (peek() != c)
            throw Error(std::string("expected '") + c + "' at column " + std::to_string(i + 1) + " in '" + s + "'");
        ++i;
    }
};

int parse_node(Tokens& t, Bracketing& b)
{
    Bracketing::Node n;
    if (t.peek() == '(') {
        t.expect('(');
        n.left = parse_node(t, b);
        n.right = parse_node(t, b);
        t.expect(')');
    } else {
        long v = t.number();
        if (v < 1)
            throw Error("bracketing positions are 1-based");
        n.leaf = int(v - 1);
    }
    b.nodes.push_back(n);
    return int(b.nodes.size() - 1);
}

void print_node(const Bracketing& b, int k, std::string& out)
{
    auto& n = b.nodes[size_t(k)];
    if (n.leaf >= 0) {
        out += std::to_string(n.leaf + 1);
        return;
    }
    out += '(';
    print_node(b, n.left, out);
    out += ' ';
    print_node(b, n.right, out);
    out += ')';
}

void leaf_order(const Bracketing& b, int k, std::vector<int>& out)
{
    auto& n = b.nodes[size_t(k)];
    if (n.leaf >= 0) {
        out.push_back(n.leaf);
        return;
    }
    leaf_order(b, n.left, out);
    leaf_order(b, n.right, out);
}

} // namespace

Bracketing Bracketing::parse(const std::string& text)
{
    Tokens t{text};
    Bracketing b;
    parse_node(t, b);
    if (!t.eof())
        throw Error("trailing text in bracketing '" + text + "'");
    return b;
}

std::string Bracketing::str() const
{
    std::string out;
    if (!nodes.empty())
        print_node(*this, int(nodes.size() - 1), out);
    return out;
}

size_t Bracketing::leaves() const
{
    return size_t(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.leaf >= 0; }));
}

// ---------------------------------------------------------------- specs

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities)
{
    if (perm.size() != parities.size())
        throw Error("koszul_sign: permutation of length " + std::to_string(perm.size()) + " against " +
                    std::to_string(parities.size()) + " parities");
    std::vector<char> seen(perm.size(), 0);
    for (int v : perm) {
        if (v < 0 || size_t(v) >= perm.size() || seen[size_t(v)])
            throw Error("koszul_sign: not a permutation");
        seen[size_t(v)] = 1;
    }
    int s = 1;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b] && parities[size_t(perm[a])] && parities[size_t(perm[b])])
                s = -s;
    return s;
}

void IdentitySpec::validate() const
{
    if (name.empty())
        throw Error("identity spec without a name");
    if (arity < 1)
        throw Error("identity " + name + ": arity must be positive");
    if (monomials.empty())
        throw Error("identity " + name + ": no monomials");
    for (size_t m = 0; m < monomials.size(); ++m) {
        auto& mo = monomials[m];
        std::string where = "identity " + name + " monomial " + std::to_string(m + 1) + ": ";
        if (mo.sign != 1 && mo.sign != -1)
            throw Error(where + "sign must be + or -");
        if (mo.perm.size() != size_t(arity))
            throw Error(where + "permutation must use all " + std::to_string(arity) + " variables");
        std::vector<int> sorted = mo.perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < arity; ++i)
            if (sorted[size_t(i)] != i)
                throw Error(where + "permutation must use each variable once");
        if (mo.bracketing.nodes.empty())
            throw Error(where + "empty bracketing");
        std::vector<int> order;
        leaf_order(mo.bracketing, int(mo.bracketing.nodes.size() - 1), order);
        if (order.size() != size_t(arity))
            throw Error(where + "bracketing must have " + std::to_string(arity) + " leaves");
        for (int i = 0; i < arity; ++i)
            if (order[size_t(i)] != i)
                throw Error(where + "bracketing leaves must read 1.." + std::to_string(arity) + " left to right");
    }
}

IdentitySpec parse_identity(const std::string& text)
{
    IdentitySpec spec;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_arity = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        auto fail = [&](const std::string& msg) {
            throw Error("identity line " + std::to_string(lineno) + ": " + msg);
        };
        if (head == "identity") {
            if (!(ls >> spec.name))
                fail("missing name");
        } else if (head == "arity") {
            if (!(ls >> spec.arity) || spec.arity < 1)
                fail("bad arity");
            have_arity = true;
        } else if (head == "+" || head == "-") {
            if (!have_arity)
                fail("monomial before arity");
            IdentityMonomial m;
            m.sign = head == "+" ? 1 : -1;
            std::string rest;
            std::getline(ls, rest);
            Tokens t{rest};
            t.expect('(');
            while (t.peek() != ')') {
                if (t.eof())
                    fail("unterminated permutation");
                long v = t.number();
                if (v < 1 || v > spec.arity)
                    fail("variable " + std::to_string(v) + " out of range");
                m.perm.push_back(int(v - 1));
            }
            t.expect(')');
            // bracketing runs to the matching parenthesis, or is a single leaf
            t.skip();
            size_t start = t.i, depth = 0, end = start;
            if (t.peek() == '(') {
                for (end = start; end < rest.size(); ++end) {
                    if (rest[end] == '(')
                        ++depth;
                    else if (rest[end] == ')' && --depth == 0) {
                        ++end;
                        break;
                    }
                }
                if (depth != 0)
                    fail("unbalanced bracketing");
            } else {
                while (end < rest.size() && std::isdigit(static_cast<unsigned char>(rest[end])))
                    ++end;
            }
            try {
                m.bracketing = Bracketing::parse(rest.substr(start, end - start));
            } catch (const Error& e) {
                fail(e.what());
            }
            std::istringstream tail(rest.substr(end));
            std::string flag;
            while (tail >> flag) {
                if (flag == "koszul")
                    m.koszul = true;
                else
                    fail("unknown flag '" + flag + "'");
            }
            spec.monomials.push_back(std::move(m));
        } else {
            fail("unknown keyword '" + head + "'");
        }
    }
    spec.validate();
    return spec;
}

std::string serialize_identity(const IdentitySpec& spec)
{
    spec.validate();
    std::string out = "identity " + spec.name + "\narity " + std::to_string(spec.arity) + "\n";
    for (auto& m : spec.monomials) {
        out += m.sign > 0 ? "+ (" : "- (";
        for (size_t i = 0; i < m.perm.size(); ++i)
            out += (i ? " " : "") + std::to_string(m.perm[i] + 1);
        out += ") " + m.bracketing.str();
        if (m.koszul)
            out += " koszul";
        out += "\n";
    }
    return out;
}

const std::vector<IdentitySpec>& builtin_specs()
{
    static const std::vector<IdentitySpec> specs = [] {
        std::vector<IdentitySpec> v;
        for (const char* n : {"assoc", "alt-left", "alt-right", "supercomm", "super-jordan"}) {
            auto& files = embedded_files();
            auto it = files.find(std::string("identities/") + n + ".id");
            if (it == files.end())
                throw Error(std::string("builtin identity ") + n + " missing from the embedded data");
            v.push_back(parse_identity(it->second));
        }
        return v;
    }();
    return specs;
}

const IdentitySpec& builtin_spec(const std::string& name)
{
    for (auto& s : builtin_specs())
        if (s.name == name)
            return s;
    throw Error("unknown identity '" + name + "'");
}

// ---------------------------------------------------------------- evaluation

namespace {

template <class F>
class Sweeper {
public:
    using T = typename F::T;
    using SV = std::vector<std::pair<uint32_t, T>>; // sorted sparse vector

    Sweeper(F f, const SuperAlgebra& A, const IdentitySpec& spec)
        : f_(f), A_(A), spec_(spec), dim_(A.dim()), acc_(A.dim(), f.from_int(0)), mark_(A.dim(), 0)
    {
        tab_.resize(dim_ * dim_);
        for (size_t i = 0; i < tab_.size(); ++i)
            for (auto& e : A.table()[i])
                tab_[i].push_back({e.k, f.from_scalar(e.c)});
        prepare();
    }

    IdentityReport run()
    {
        IdentityReport rep;
        rep.spec = spec_.name;
        rep.algebra = A_.name();
        size_t r = size_t(spec_.arity);
        std::vector<size_t> tup(r, 0);
        std::vector<int> par(r);
        if (dim_ == 0) {
            rep.pass = true;
            return rep;
        }
        while (true) {
            ++rep.tuples_checked;
            for (size_t v = 0; v < r; ++v)
                par[v] = A_.parity(tup[v]);
            clear();
            for (auto& m : mons_) {
                int s = m.sign;
                if (m.koszul)
                    for (auto [a, b] : m.inversions)
                        if (par[size_t(a)] && par[size_t(b)])
                            s = -s;
                const SV& val = eval(m, int(m.nodes.size() - 1), tup);
                T sc = f_.from_int(s);
                for (auto& [k, c] : val)
                    add_acc(k, f_.mul(sc, c));
            }
            if (!touched_.empty()) {
                bool nonzero = false;
                for (auto k : touched_)
                    nonzero = nonzero || !F::zero(acc_[k]);
                if (nonzero) {
                    rep.pass = false;
                    rep.witness = tup;
                    std::vector<Scalar> c;
                    for (size_t k = 0; k < dim_; ++k)
                        c.push_back(f_.to_scalar(A_.ring(), acc_[k]));
                    rep.residual = Element(A_, std::move(c));
                    return rep;
                }
            }
            // next tuple in lexicographic order
            size_t pos = r;
            while (pos > 0) {
                --pos;
                if (++tup[pos] < dim_)
                    break;
                tup[pos] = 0;
                if (pos == 0) {
                    rep.pass = true;
                    return rep;
                }
            }
        }
    }

private:
    struct Node {
        int leaf = -1, left = -1, right = -1;
        int shape = -1;              // memo shape id for inner non-root nodes
        std::vector<int> vars;       // variables under this node, left to right
    };
    struct Mon {
        int sign;
        bool koszul;
        std::vector<std::pair<int, int>> inversions;
        std::vector<Node> nodes;
    };

    void prepare()
    {
        std::map<std::string, int> shapes;
        for (auto& m : spec_.monomials) {
            Mon mo{m.sign, m.koszul, {}, {}};
            for (size_t a = 0; a < m.perm.size(); ++a)
                for (size_t b = a + 1; b < m.perm.size(); ++b)
                    if (m.perm[a] > m.perm[b])
                        mo.inversions.push_back({m.perm[a], m.perm[b]});
            std::vector<std::string> code(m.bracketing.nodes.size());
            for (size_t k = 0; k < m.bracketing.nodes.size(); ++k) {
                auto& bn = m.bracketing.nodes[k];
                Node n;
                if (bn.leaf >= 0) {
                    n.leaf = m.perm[size_t(bn.leaf)];
                    n.vars = {n.leaf};
                    code[k] = ".";
                } else {
                    n.left = bn.left;
                    n.right = bn.right;
                    n.vars = mo.nodes[size_t(bn.left)].vars;
                    auto& rv = mo.nodes[size_t(bn.right)].vars;
                    n.vars.insert(n.vars.end(), rv.begin(), rv.end());
                    code[k] = "(" + code[size_t(bn.left)] + code[size_t(bn.right)] + ")";
                    bool root = k + 1 == m.bracketing.nodes.size();
                    if (!root && n.vars.size() > 2) {
                        auto [it, fresh] = shapes.emplace(code[k], int(shapes.size()));
                        n.shape = it->second;
                    }
                }
                mo.nodes.push_back(std::move(n));
            }
            mons_.push_back(std::move(mo));
        }
        // memo keys pack (shape, basis indices) into 64 bits when they fit
        size_t maxv = 0;
        for (auto& mo : mons_)
            for (auto& n : mo.nodes)
                if (n.shape >= 0)
                    maxv = std::max(maxv, n.vars.size());
        double bits = double(maxv) * std::log2(double(std::max<size_t>(dim_, 2))) +
                      std::log2(double(shapes.size() + 1)) + 1;
        memo_ok_ = bits < 62;
    }

    const SV& eval(const Mon& m, int k, const std::vector<size_t>& tup)
    {
        const Node& n = m.nodes[size_t(k)];
        if (n.leaf >= 0) {
            leafbuf_.push_back(SV{{uint32_t(tup[size_t(n.leaf)]), f_.one()}});
            return leafbuf_.back();
        }
        auto& L = m.nodes[size_t(n.left)];
        auto& R = m.nodes[size_t(n.right)];
        if (L.leaf >= 0 && R.leaf >= 0)
            return tab_[tup[size_t(L.leaf)] * dim_ + tup[size_t(R.leaf)]];
        uint64_t key = 0;
        if (n.shape >= 0 && memo_ok_) {
            key = uint64_t(n.shape);
            for (int v : n.vars)
                key = key * dim_ + tup[size_t(v)];
            auto it = memo_.find(key);
            if (it != memo_.end())
                return it->second;
        }
        const SV& x = eval(m, n.left, tup);
        const SV& y = eval(m, n.right, tup);
        SV out = product(x, y);
        if (n.shape >= 0 && memo_ok_)
            return memo_.emplace(key, std::move(out)).first->second;
        scratch_.push_back(std::move(out));
        return scratch_.back();
    }

    SV product(const SV& x, const SV& y)
    {
        std::vector<T> acc(dim_, f_.from_int(0));
        std::vector<uint32_t> touched;
        for (auto& [i, a] : x)
            for (auto& [j, b] : y) {
                auto ab = f_.mul(a, b);
                for (auto& [k, c] : tab_[size_t(i) * dim_ + j]) {
                    if (F::zero(acc[k]))
                        touched.push_back(k);
                    acc[k] = f_.add(acc[k], f_.mul(ab, c));
                }
            }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        SV out;
        for (auto k : touched)
            if (!F::zero(acc[k]))
                out.push_back({k, acc[k]});
        return out;
    }

    void clear()
    {
        for (auto k : touched_) {
            acc_[k] = f_.from_int(0);
            mark_[k] = 0;
        }
        touched_.clear();
        leafbuf_.clear();
        // only between tuples: entries may be referenced during one evaluation
        if (memo_.size() > 4'000'000)
            memo_.clear();
        scratch_.clear();
    }

    void add_acc(uint32_t k, const T& c)
    {
        if (!mark_[k]) {
            mark_[k] = 1;
            touched_.push_back(k);
        }
        acc_[k] = f_.add(acc_[k], c);
    }

    F f_;
    const SuperAlgebra& A_;
    const IdentitySpec& spec_;
    size_t dim_;
    std::vector<SV> tab_;
    std::vector<Mon> mons_;
    bool memo_ok_ = false;
    std::unordered_map<uint64_t, SV> memo_;
    std::deque<SV> leafbuf_, scratch_;
    std::vector<T> acc_;
    std::vector<char> mark_;
    std::vector<uint32_t> touched_;
};

} // namespace

IdentityReport check_identity(const SuperAlgebra& A, const IdentitySpec& spec)
{
    spec.validate();
    if (auto v = grading_violation(A))
        throw GradingError("algebra " + A.name() + " violates grading closure", (*v)[0], (*v)[1], (*v)[2]);
    const Ring* r = A.ring();
    if (r->has_params())
        return Sweeper<la::ScalarOps>(la::ScalarOps{r}, A, spec).run();
    return la::with_field(r, [&](auto f) { return Sweeper<decltype(f)>(f, A, spec).run(); });
}

} // namespace salg
