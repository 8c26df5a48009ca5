// Centers, centralizers, ideals, subalgebras and the simplicity probe. All of
// these work over a field: the algebra's ring must have no parameters.

#include <functional>
#include <random>

#include "numalg.hpp"
#include "superalg/algebra.hpp"

namespace salg {

using detail::NumAlg;

namespace {

template <class F>
std::vector<Element> to_elements(const SuperAlgebra& A, const NumAlg<F>& N, const std::vector<la::Vec<F>>& vs)
{
    std::vector<Element> out;
    for (auto& v : vs)
        out.push_back(N.to_element(A, v));
    return out;
}

// Solve for x supported on `support` with every center constraint.
template <class F>
std::vector<la::Vec<F>> center_part(const NumAlg<F>& N, const std::vector<size_t>& support, bool super)
{
    auto f = N.f;
    size_t s = support.size(), n = N.dim;
    la::Echelon<F> eq(f, s);
    if (s == 0)
        return {};
    std::vector<la::Vec<F>> cols(s);
    auto push = [&]() {
        // cols[c] is the image of the c-th unknown; each coordinate gives an equation
        for (size_t k = 0; k < n; ++k) {
            la::Vec<F> row(s);
            bool nz = false;
            for (size_t c = 0; c < s; ++c) {
                row[c] = cols[c][k];
                nz = nz || !F::zero(row[c]);
            }
            if (nz)
                eq.insert(std::move(row));
        }
    };
    for (size_t a = 0; a < n && eq.rank() < s; ++a) {
        // commutator [a, x]
        for (size_t c = 0; c < s; ++c) {
            size_t k = support[c];
            auto ax = N.lmul(a, N.unitvec(k));
            auto xa = N.rmul(N.unitvec(k), a);
            bool plus = super && N.par[a] && N.par[k];
            for (size_t t = 0; t < n; ++t)
                ax[t] = plus ? f.add(ax[t], xa[t]) : f.sub(ax[t], xa[t]);
            cols[c] = std::move(ax);
        }
        push();
        for (size_t b = 0; b < n && eq.rank() < s; ++b) {
            auto ab = N.lmul(a, N.unitvec(b));
            // (x,a,b)
            for (size_t c = 0; c < s; ++c) {
                auto x = N.unitvec(support[c]);
                auto l = N.rmul(N.rmul(x, a), b);
                auto r = N.mul(x, ab);
                for (size_t t = 0; t < n; ++t)
                    l[t] = f.sub(l[t], r[t]);
                cols[c] = std::move(l);
            }
            push();
            // (a,x,b)
            for (size_t c = 0; c < s; ++c) {
                auto x = N.unitvec(support[c]);
                auto l = N.rmul(N.lmul(a, x), b);
                auto r = N.lmul(a, N.rmul(x, b));
                for (size_t t = 0; t < n; ++t)
                    l[t] = f.sub(l[t], r[t]);
                cols[c] = std::move(l);
            }
            push();
            // (a,b,x)
            for (size_t c = 0; c < s; ++c) {
                auto x = N.unitvec(support[c]);
                auto l = N.mul(ab, x);
                auto r = N.lmul(a, N.lmul(b, x));
                for (size_t t = 0; t < n; ++t)
                    l[t] = f.sub(l[t], r[t]);
                cols[c] = std::move(l);
            }
            push();
        }
    }
    std::vector<la::Vec<F>> out;
    for (auto& v : eq.nullspace()) {
        la::Vec<F> full = N.zero();
        for (size_t c = 0; c < s; ++c)
            full[support[c]] = v[c];
        out.push_back(std::move(full));
    }
    return out;
}

} // namespace

CenterBasis center(const SuperAlgebra& A, bool super)
{
    return la::with_field(A.ring(), [&](auto f) {
        NumAlg<decltype(f)> N(f, A);
        std::vector<size_t> ev, od;
        for (size_t i = 0; i < A.dim(); ++i)
            (A.parity(i) ? od : ev).push_back(i);
        CenterBasis out;
        out.even_part = to_elements(A, N, center_part(N, ev, super));
        out.odd_part = to_elements(A, N, center_part(N, od, super));
        return out;
    });
}

bool in_center(const Element& x, bool super)
{
    const SuperAlgebra& A = *x.algebra();
    for (size_t a = 0; a < A.dim(); ++a) {
        auto ea = A.basis(a);
        Element comm = super ? supercommutator(ea, x) : commutator_plain(ea, x);
        if (!comm.is_zero())
            return false;
        for (size_t b = 0; b < A.dim(); ++b) {
            auto eb = A.basis(b);
            if (!associator(x, ea, eb).is_zero() || !associator(ea, x, eb).is_zero() ||
                !associator(ea, eb, x).is_zero())
                return false;
        }
    }
    return true;
}

namespace {

std::vector<Element> centralizer_impl(const SuperAlgebra& A, const Element& u, bool anti)
{
    if (u.algebra() != &A)
        throw Error("element does not belong to " + A.name());
    return la::with_field(A.ring(), [&](auto f) {
        using F = decltype(f);
        NumAlg<F> N(f, A);
        auto uv = N.from_element(u);
        size_t n = A.dim();
        std::vector<la::Vec<F>> cols;
        for (size_t k = 0; k < n; ++k) {
            auto xu = N.mul(N.unitvec(k), uv), ux = N.mul(uv, N.unitvec(k));
            for (size_t t = 0; t < n; ++t)
                xu[t] = anti ? f.add(xu[t], ux[t]) : f.sub(xu[t], ux[t]);
            cols.push_back(std::move(xu));
        }
        la::Echelon<F> eq(f, n);
        for (size_t t = 0; t < n; ++t) {
            la::Vec<F> row(n);
            for (size_t k = 0; k < n; ++k)
                row[k] = cols[k][t];
            eq.insert(std::move(row));
        }
        return to_elements(A, N, eq.nullspace());
    });
}

// Smallest subspace containing the seeds and closed under the operators
// given as functions v -> image.
template <class F, class Ops>
la::Echelon<F> spin(const NumAlg<F>& N, const std::vector<la::Vec<F>>& seeds, const Ops& ops)
{
    la::Echelon<F> sp(N.f, N.dim);
    std::vector<la::Vec<F>> queue;
    for (auto& s : seeds)
        if (sp.insert(s))
            queue.push_back(s);
    while (!queue.empty() && sp.rank() < N.dim) {
        auto v = std::move(queue.back());
        queue.pop_back();
        for (auto& op : ops) {
            auto w = op(v);
            if (sp.insert(w))
                queue.push_back(std::move(w));
            if (sp.rank() == N.dim)
                break;
        }
    }
    return sp;
}

} // namespace

std::vector<Element> centralizer(const SuperAlgebra& A, const Element& u) { return centralizer_impl(A, u, false); }

std::vector<Element> anticentralizer(const SuperAlgebra& A, const Element& u)
{
    return centralizer_impl(A, u, true);
}

IdealReport ideal_closure(const SuperAlgebra& A, const Element& v)
{
    if (v.algebra() != &A)
        throw Error("element does not belong to " + A.name());
    return la::with_field(A.ring(), [&](auto f) {
        using F = decltype(f);
        NumAlg<F> N(f, A);
        std::vector<std::function<la::Vec<F>(const la::Vec<F>&)>> ops;
        for (size_t i = 0; i < A.dim(); ++i) {
            ops.push_back([&N, i](const la::Vec<F>& x) { return N.lmul(i, x); });
            ops.push_back([&N, i](const la::Vec<F>& x) { return N.rmul(x, i); });
        }
        auto sp = spin(N, {N.from_element(v)}, ops);
        IdealReport rep;
        rep.generator = v;
        rep.closure_basis = to_elements(A, N, sp.rows());
        rep.is_proper = sp.rank() < A.dim() && (sp.rank() > 0 || v.is_zero());
        return rep;
    });
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::simple:
        return "simple";
    case Verdict::ideal_found:
        return "ideal_found";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

// ---------------------------------------------------------------- simplicity probe

namespace {

template <class F>
using Mat = std::vector<la::Vec<F>>; // row-major, acts on column vectors

template <class F>
Mat<F> matmul(const F& f, const Mat<F>& a, const Mat<F>& b)
{
    size_t n = a.size();
    Mat<F> c(n, la::Vec<F>(n, f.from_int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (F::zero(a[i][k]))
                continue;
            for (size_t j = 0; j < n; ++j)
                if (!F::zero(b[k][j]))
                    c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
        }
    return c;
}

template <class F>
la::Vec<F> apply(const F& f, const Mat<F>& m, const la::Vec<F>& v)
{
    size_t n = m.size();
    la::Vec<F> out(n, f.from_int(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!F::zero(m[i][j]) && !F::zero(v[j]))
                out[i] = f.add(out[i], f.mul(m[i][j], v[j]));
    return out;
}

template <class T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& m)
{
    size_t n = m.size();
    std::vector<std::vector<T>> t(n, std::vector<T>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            t[j][i] = m[i][j];
    return t;
}

template <class F>
std::vector<la::Vec<F>> kernel(const F& f, const Mat<F>& m)
{
    la::Echelon<F> e(f, m.size());
    for (auto& r : m)
        e.insert(r);
    return e.nullspace();
}

// L_e, R_e for every basis element plus the two parity projections.
template <class F>
std::vector<Mat<F>> generators(const NumAlg<F>& N)
{
    size_t n = N.dim;
    auto f = N.f;
    std::vector<Mat<F>> gens;
    for (size_t i = 0; i < n; ++i) {
        Mat<F> L(n, la::Vec<F>(n, f.from_int(0))), R = L;
        for (size_t j = 0; j < n; ++j) {
            for (auto& [k, c] : N.tab[i * n + j])
                L[k][j] = f.add(L[k][j], c);
            for (auto& [k, c] : N.tab[j * n + i])
                R[k][j] = f.add(R[k][j], c);
        }
        gens.push_back(std::move(L));
        gens.push_back(std::move(R));
    }
    for (int p = 0; p < 2; ++p) {
        Mat<F> P(n, la::Vec<F>(n, f.from_int(0)));
        for (size_t i = 0; i < n; ++i)
            if (N.par[i] == p)
                P[i][i] = f.one();
        gens.push_back(std::move(P));
    }
    return gens;
}

template <class F>
la::Echelon<F> spin_mats(const NumAlg<F>& N, const la::Vec<F>& v, const std::vector<Mat<F>>& gens)
{
    std::vector<std::function<la::Vec<F>(const la::Vec<F>&)>> ops;
    for (auto& g : gens)
        ops.push_back([&N, &g](const la::Vec<F>& x) { return apply(N.f, g, x); });
    return spin(N, {v}, ops);
}

template <class F>
IdealReport report_from(const SuperAlgebra& A, const NumAlg<F>& N, const la::Vec<F>& gen,
                        const std::vector<la::Vec<F>>& basis)
{
    IdealReport rep;
    rep.generator = N.to_element(A, gen);
    rep.closure_basis = to_elements(A, N, basis);
    rep.is_proper = !basis.empty() && basis.size() < N.dim;
    return rep;
}

struct NortonOutcome {
    bool certified = false;
    std::optional<IdealReport> ideal;
};

// Randomized MeatAxe step over GF(p): a random operator theta with a
// one-dimensional eigenspace whose vector and dual vector both spin to the
// whole space certifies that no proper graded ideal exists.
NortonOutcome norton(const SuperAlgebra& A, const NumAlg<la::PField>& N, int trials, std::mt19937_64& rng)
{
    using F = la::PField;
    auto f = N.f;
    size_t n = N.dim;
    NortonOutcome out;
    if (f.p > 4096)
        return out;
    auto gens = generators(N);
    std::vector<Mat<F>> gensT;
    for (auto& g : gens)
        gensT.push_back(transpose(g));
    std::uniform_int_distribution<uint32_t> coef(0, f.p - 1);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    for (int t = 0; t < trials; ++t) {
        Mat<F> theta(n, la::Vec<F>(n, 0));
        for (int term = 0; term < 6; ++term) {
            Mat<F> w = gens[pick(rng)];
            int len = int(rng() % 3);
            for (int l = 0; l < len; ++l)
                w = matmul(f, w, gens[pick(rng)]);
            uint32_t c = coef(rng);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    theta[i][j] = f.add(theta[i][j], f.mul(c, w[i][j]));
        }
        for (uint32_t lam = 0; lam < f.p; ++lam) {
            Mat<F> m = theta;
            for (size_t i = 0; i < n; ++i)
                m[i][i] = f.sub(m[i][i], lam);
            auto ker = kernel(f, m);
            if (ker.empty())
                continue;
            auto sp = spin_mats(N, ker[0], gens);
            if (sp.rank() < n) {
                out.ideal = report_from(A, N, ker[0], sp.rows());
                return out;
            }
            auto kerT = kernel(f, transpose(m));
            auto dsp = spin_mats(N, kerT[0], gensT);
            if (dsp.rank() < n) {
                // annihilator of an invariant subspace of the dual is an ideal
                auto ann = dsp.nullspace();
                out.ideal = report_from(A, N, ann[0], ann);
                return out;
            }
            if (ker.size() == 1) {
                out.certified = true;
                return out;
            }
        }
    }
    return out;
}

template <class F>
std::optional<IdealReport> closure_search(const SuperAlgebra& A, const NumAlg<F>& N, int trials, std::mt19937_64& rng)
{
    auto gens = generators(N);
    size_t n = N.dim;
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int t = -int(n); t < trials; ++t) {
        la::Vec<F> v;
        if (t < 0) {
            v = N.unitvec(size_t(t + int(n)));
        } else {
            v = N.zero();
            for (size_t i = 0; i < n; ++i)
                v[i] = N.f.from_int(coef(rng));
        }
        bool nz = false;
        for (auto& x : v)
            nz = nz || !F::zero(x);
        if (!nz)
            continue;
        auto sp = spin_mats(N, v, gens);
        if (sp.rank() < n)
            return report_from(A, N, v, sp.rows());
    }
    return std::nullopt;
}

bool trivial_product(const SuperAlgebra& A)
{
    for (auto& row : A.table())
        if (!row.empty())
            return false;
    return true;
}

} // namespace

ProbeResult simplicity_probe(const SuperAlgebra& A, int trials, uint64_t seed)
{
    if (A.ring()->has_params())
        throw Error("simplicity probe needs field coefficients; specialize " + A.name() + " first");
    if (trials < 0)
        throw Error("trials must be non-negative");
    ProbeResult res;
    std::mt19937_64 rng(seed);
    if (trivial_product(A)) {
        if (A.dim() == 1)
            throw Error("not simple, trivial multiplication");
        res.verdict = Verdict::ideal_found;
        res.ideal = ideal_closure(A, A.basis(0));
        res.note = "trivial multiplication";
        return res;
    }
    uint32_t p = A.ring()->characteristic();
    if (p != 0) {
        NumAlg<la::PField> N(la::PField{p}, A);
        res.primes = {p};
        if (auto id = closure_search(A, N, trials, rng)) {
            res.verdict = Verdict::ideal_found;
            res.ideal = id;
            return res;
        }
        auto nt = norton(A, N, std::max(trials, 1), rng);
        if (nt.ideal) {
            res.verdict = Verdict::ideal_found;
            res.ideal = nt.ideal;
            res.note = "invariant subspace found by random operator search";
            return res;
        }
        res.verdict = Verdict::simple;
        res.certified = nt.certified;
        res.note = nt.certified ? "irreducibility certificate over GF(" + std::to_string(p) + ")"
                                : (p > 4096 ? "heuristic: closures only, field too large for eigenvalue search"
                                            : "heuristic: no invariant subspace found");
        return res;
    }
    // characteristic 0: exact closures over Q, certificates modulo small primes
    NumAlg<la::QField> NQ(la::QField{}, A);
    if (auto id = closure_search(A, NQ, trials, rng)) {
        res.verdict = Verdict::ideal_found;
        res.ideal = id;
        return res;
    }
    bool saw_modular_subspace = false;
    for (uint32_t q : {101u, 103u, 107u, 109u, 113u}) {
        AlgebraPtr Aq;
        try {
            Specialization sp{q, {}, {}};
            Aq = specialize_algebra(A, sp);
        } catch (const Error&) {
            continue; // a denominator vanishes modulo q
        }
        NumAlg<la::PField> N(la::PField{q}, *Aq);
        res.primes.push_back(q);
        auto nt = norton(*Aq, N, std::max(trials, 1), rng);
        if (nt.certified) {
            res.verdict = Verdict::simple;
            res.certified = true;
            res.note = "irreducibility certificate modulo " + std::to_string(q) + " lifts to Q";
            return res;
        }
        if (nt.ideal)
            saw_modular_subspace = true;
    }
    if (saw_modular_subspace) {
        res.verdict = Verdict::inconclusive;
        res.note = "invariant subspaces modulo the primes used, none found over Q";
    } else {
        res.verdict = Verdict::simple;
        res.note = "heuristic: no ideal found over Q or modulo the primes used";
    }
    return res;
}

// ---------------------------------------------------------------- subalgebras

std::optional<std::vector<Scalar>> coordinates_in_span(const std::vector<Element>& basis, const Element& x)
{
    if (basis.empty())
        return x.is_zero() ? std::optional<std::vector<Scalar>>(std::vector<Scalar>{}) : std::nullopt;
    const SuperAlgebra& A = *x.algebra();
    return la::with_field(A.ring(), [&](auto f) -> std::optional<std::vector<Scalar>> {
        using F = decltype(f);
        NumAlg<F> N(f, A);
        size_t n = A.dim(), r = basis.size();
        std::vector<la::Vec<F>> M(n, la::Vec<F>(r));
        for (size_t c = 0; c < r; ++c) {
            auto v = N.from_element(basis[c]);
            for (size_t k = 0; k < n; ++k)
                M[k][c] = v[k];
        }
        auto sol = la::solve(f, M, N.from_element(x), r);
        if (!sol)
            return std::nullopt;
        std::vector<Scalar> out;
        for (auto& s : *sol)
            out.push_back(f.to_scalar(A.ring(), s));
        return out;
    });
}

AlgebraPtr subalgebra_from_embedding(const SuperAlgebra& A, const std::vector<Element>& vecs,
                                     std::vector<std::string> names, std::vector<int> parity, std::string name,
                                     std::optional<Element> unit)
{
    if (vecs.size() != names.size() || vecs.size() != parity.size())
        throw Error("subalgebra: vectors, names and parities differ in length");
    for (size_t i = 0; i < vecs.size(); ++i) {
        auto p = vecs[i].parity();
        if (!p || *p != parity[i])
            throw Error("subalgebra: basis vector " + names[i] + " is not homogeneous of the declared parity");
    }
    return la::with_field(A.ring(), [&](auto f) {
        using F = decltype(f);
        NumAlg<F> N(f, A);
        size_t n = A.dim(), r = vecs.size();
        std::vector<la::Vec<F>> M(n, la::Vec<F>(r)), cols;
        for (size_t c = 0; c < r; ++c) {
            cols.push_back(N.from_element(vecs[c]));
            for (size_t k = 0; k < n; ++k)
                M[k][c] = cols[c][k];
        }
        if (la::rank(f, cols, n) != r)
            throw Error("subalgebra: spanning vectors are linearly dependent");
        auto coords = [&](const la::Vec<F>& v) {
            auto sol = la::solve(f, M, v, r);
            if (!sol)
                throw Error("subalgebra " + name + ": span is not closed under multiplication");
            return *sol;
        };
        TableBuilder tb(A.ring(), r);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                auto c = coords(N.mul(cols[i], cols[j]));
                for (size_t k = 0; k < r; ++k)
                    if (!F::zero(c[k]))
                        tb.add(i, j, k, f.to_scalar(A.ring(), c[k]));
            }
        std::optional<std::vector<Scalar>> u;
        if (unit) {
            auto c = coords(N.from_element(*unit));
            u = std::vector<Scalar>();
            for (auto& x : c)
                u->push_back(f.to_scalar(A.ring(), x));
        }
        return SuperAlgebra::make(name, A.ring(), names, parity, tb.build(), u, A.notes());
    });
}

} // namespace salg
