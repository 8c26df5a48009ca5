#include "superalg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace salg::catalog {

namespace {

void need_char(const Ring* r, uint32_t p, const std::string& what)
{
    if (r->characteristic() != p)
        throw Error(what + " needs characteristic " + std::to_string(p) + ", got " + r->describe());
}

void need_not_char2(const Ring* r, const std::string& what)
{
    if (r->characteristic() == 2)
        throw Error(what + " is unavailable in characteristic 2");
}

void same_ring(const std::vector<const Scalar*>& xs)
{
    for (auto* x : xs)
        if (x->ring() != xs[0]->ring())
            throw Error("catalog parameters must share one coefficient ring");
}

using Terms = std::vector<std::pair<Scalar, size_t>>;

} // namespace

// ---------------------------------------------------------------- alternative superalgebras

AlgebraPtr make_octonion(const Scalar& mu, const Scalar& beta, const Scalar& gamma, bool graded)
{
    same_ring({&mu, &beta, &gamma});
    const Ring* r = mu.ring();
    need_char(r, 2, "the octonion table");
    if (beta.is_zero() || gamma.is_zero())
        throw Error("octonion table needs beta != 0 and gamma != 0");
    Scalar one = Scalar::constant(r, 1);
    const Scalar &m = mu, &b = beta, &g = gamma;
    Scalar mb = m * b, mg = m * g, bg = b * g, mbg = m * b * g;
    // rows e1..e7, columns e1..e7
    std::vector<std::vector<Terms>> T = {
        {{{one, 1}, {m, 0}}, {{one, 2}, {one, 3}}, {{m, 2}}, {{one, 4}, {one, 5}}, {{m, 4}}, {{one, 7}},
         {{one, 7}, {m, 6}}},
        {{{one, 3}}, {{b, 0}}, {{b, 1}}, {{one, 6}}, {{one, 7}}, {{b, 4}}, {{b, 5}}},
        {{{one, 3}, {m, 2}}, {{b, 0}, {b, 1}}, {{mb, 0}}, {{one, 7}}, {{m, 6}, {one, 7}}, {{b, 5}, {b, 4}},
         {{mb, 4}}},
        {{{one, 5}}, {{one, 6}}, {{one, 7}}, {{g, 0}}, {{g, 1}}, {{g, 2}}, {{g, 3}}},
        {{{one, 5}, {m, 4}}, {{one, 7}}, {{one, 7}, {m, 6}}, {{g, 0}, {g, 1}}, {{mg, 0}}, {{g, 3}, {g, 2}},
         {{mg, 2}}},
        {{{one, 6}, {one, 7}}, {{b, 4}}, {{b, 5}, {b, 4}}, {{g, 2}}, {{g, 2}, {g, 3}}, {{bg, 0}},
         {{bg, 1}, {-bg, 0}}},
        {{{m, 6}}, {{b, 5}}, {{mb, 4}}, {{g, 3}}, {{mg, 2}}, {{bg, 1}}, {{mbg, 0}}},
    };
    TableBuilder tb(r, 8);
    for (size_t i = 0; i < 8; ++i) {
        tb.add(0, i, i, one);
        if (i)
            tb.add(i, 0, i, one);
    }
    for (size_t i = 1; i < 8; ++i)
        for (size_t j = 1; j < 8; ++j)
            for (auto& [c, k] : T[i - 1][j - 1])
                tb.add(i, j, k, c);
    std::vector<std::string> names;
    for (int i = 0; i < 8; ++i)
        names.push_back("e" + std::to_string(i));
    std::vector<int> par = graded ? std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1} : std::vector<int>(8, 0);
    std::vector<Scalar> unit(8, Scalar(r));
    unit[0] = one;
    std::vector<std::string> notes = {
        "emendation: row e3 column e5 printed with an undeclared alpha, read as mu*e6 + e7",
        "emendation: row e6 column e7 beta*gamma*(e1 - 1) equals beta*gamma*(e1 + 1) in characteristic 2",
        "emendation: row e7 column e3 printed beta*gamma*e4, replaced by mu*beta*e4 (Cayley-Dickson doubling; "
        "required for alternativity)",
    };
    return SuperAlgebra::make(graded ? "octonion_char2" : "octonion_ungraded_char2", r, names, par, tb.build(), unit,
                              notes);
}

AlgebraPtr make_octonion_super(const Scalar& mu, const Scalar& beta, const Scalar& gamma)
{
    return make_octonion(mu, beta, gamma, true);
}

AlgebraPtr make_octonion_u(const Scalar& mu, const Scalar& beta, const Scalar& gamma, const Scalar& alpha)
{
    same_ring({&mu, &beta, &gamma, &alpha});
    if (alpha.is_zero())
        throw Error("O[u] needs alpha != 0");
    auto O = make_octonion(mu, beta, gamma, false);
    return tensor_with_quadratic(*O, alpha, 1)->renamed("octonion_u_char2");
}

namespace {

AlgebraPtr b12_any(const Ring* r)
{
    TableBuilder tb(r, 3);
    for (size_t i = 0; i < 3; ++i) {
        tb.add(0, i, i, 1);
        if (i)
            tb.add(i, 0, i, 1);
    }
    tb.add(1, 2, 0, 1);
    tb.add(2, 1, 0, -1);
    std::vector<Scalar> unit = {Scalar::constant(r, 1), Scalar(r), Scalar(r)};
    return SuperAlgebra::make("B(1,2)", r, {"1", "x", "y"}, {0, 1, 1}, tb.build(), unit);
}

// M2(k) + k m1 + k m2 with e_ij m_k = delta_ik m_j and m a = abar m
AlgebraPtr b42_any(const Ring* r)
{
    TableBuilder tb(r, 6);
    auto E = [](int i, int j) { return size_t((i - 1) * 2 + (j - 1)); }; // e11 e12 e21 e22
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int l = 1; l <= 2; ++l)
                tb.add(E(i, j), E(j, l), E(i, l), 1);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            tb.add(E(i, j), size_t(4 + i - 1), size_t(4 + j - 1), 1);
    // symplectic involution: e11 <-> e22, e12 -> -e12, e21 -> -e21
    std::vector<std::vector<std::pair<long, size_t>>> bar = {{{1, 3}}, {{-1, 1}}, {{-1, 2}}, {{1, 0}}};
    for (size_t a = 0; a < 4; ++a)
        for (int k = 1; k <= 2; ++k)
            for (auto& [c, b] : bar[a]) {
                int i = int(b / 2) + 1, j = int(b % 2) + 1;
                if (i == k)
                    tb.add(size_t(4 + k - 1), a, size_t(4 + j - 1), c);
            }
    tb.add(4, 5, E(1, 1), 1);
    tb.add(5, 4, E(2, 2), -1);
    tb.add(4, 4, E(2, 1), -1);
    tb.add(5, 5, E(1, 2), 1);
    std::vector<Scalar> unit(6, Scalar(r));
    unit[0] = unit[3] = Scalar::constant(r, 1);
    return SuperAlgebra::make("B(4,2)", r, {"e11", "e12", "e21", "e22", "m1", "m2"}, {0, 0, 0, 0, 1, 1}, tb.build(),
                              unit, {"action e_ij m_k = delta_ik m_j"});
}

} // namespace

AlgebraPtr make_b12(const Ring* r)
{
    need_char(r, 3, "B(1,2)");
    return b12_any(r);
}

AlgebraPtr make_b42(const Ring* r)
{
    need_char(r, 3, "B(4,2)");
    return b42_any(r);
}

AlgebraPtr make_b_gamma(int trunc_degree, const Scalar& gamma)
{
    const Ring* r = gamma.ring();
    need_char(r, 3, "B(Gamma,d,gamma)");
    if (trunc_degree != 3)
        throw Error("B(Gamma,d,gamma) is supported only for Gamma = k[x]/(x^3)");
    const size_t d = 3;
    TableBuilder tb(r, 2 * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (i + j < d) {
                tb.add(i, j, i + j, 1);
                tb.add(i, j + d, i + j + d, 1);
                tb.add(i + d, j, i + j + d, 1);
                tb.add(i + d, j + d, i + j, gamma);
            }
            // 2 d(x) y + x d(y) with d = d/dx
            if (i > 0 && i - 1 + j < d)
                tb.add(i + d, j + d, i - 1 + j, long(2 * i));
            if (j > 0 && i + j - 1 < d)
                tb.add(i + d, j + d, i + j - 1, long(j));
        }
    std::vector<Scalar> unit(2 * d, Scalar(r));
    unit[0] = Scalar::constant(r, 1);
    return SuperAlgebra::make("B(Gamma,d,gamma)", r, {"1", "x", "x2", "1b", "xb", "x2b"}, {0, 0, 0, 1, 1, 1},
                              tb.build(), unit, {"Gamma = k[x]/(x^3), d = d/dx"});
}

// ---------------------------------------------------------------- division superalgebras

AlgebraPtr make_quaternion(const Scalar& a, const Scalar& b)
{
    same_ring({&a, &b});
    const Ring* r = a.ring();
    need_not_char2(r, "generalized quaternions");
    if (a.is_zero() || b.is_zero())
        throw Error("quaternion parameters must be nonzero");
    TableBuilder tb(r, 4);
    for (size_t i = 0; i < 4; ++i) {
        tb.add(0, i, i, 1);
        if (i)
            tb.add(i, 0, i, 1);
    }
    tb.add(1, 1, 0, a);
    tb.add(2, 2, 0, b);
    tb.add(3, 3, 0, -(a * b));
    tb.add(1, 2, 3, 1);
    tb.add(2, 1, 3, -1);
    tb.add(1, 3, 2, a);
    tb.add(3, 1, 2, -a);
    tb.add(2, 3, 1, -b);
    tb.add(3, 2, 1, b);
    std::vector<Scalar> unit(4, Scalar(r));
    unit[0] = Scalar::constant(r, 1);
    return SuperAlgebra::make("(" + a.str() + "," + b.str() + ")", r, {"1", "i", "j", "k"}, {0, 0, 0, 0}, tb.build(),
                              unit);
}

AlgebraPtr graded_tensor(const SuperAlgebra& A, const SuperAlgebra& B)
{
    if (A.ring() != B.ring())
        throw Error("tensor factors must share a coefficient ring");
    size_t da = A.dim(), db = B.dim();
    auto idx = [&](size_t a, size_t x) { return a * db + x; };
    std::vector<std::string> names;
    std::vector<int> par;
    for (size_t a = 0; a < da; ++a)
        for (size_t x = 0; x < db; ++x) {
            const auto &na = A.basis_name(a), &nb = B.basis_name(x);
            names.push_back(na == "1" ? nb : nb == "1" ? na : na + "." + nb);
            par.push_back(A.parity(a) ^ B.parity(x));
        }
    TableBuilder tb(A.ring(), da * db);
    for (size_t a = 0; a < da; ++a)
        for (size_t x = 0; x < db; ++x)
            for (size_t b = 0; b < da; ++b)
                for (size_t y = 0; y < db; ++y) {
                    long s = (B.parity(x) && A.parity(b)) ? -1 : 1;
                    for (auto& ea : A.product(a, b))
                        for (auto& eb : B.product(x, y))
                            tb.add(idx(a, x), idx(b, y), idx(ea.k, eb.k),
                                   ea.c * eb.c * Scalar::constant(A.ring(), s));
                }
    std::optional<std::vector<Scalar>> unit;
    if (A.has_unit() && B.has_unit()) {
        unit = std::vector<Scalar>(da * db, Scalar(A.ring()));
        for (size_t a = 0; a < da; ++a)
            for (size_t x = 0; x < db; ++x)
                (*unit)[idx(a, x)] = (*A.unit_coords())[a] * (*B.unit_coords())[x];
    }
    return SuperAlgebra::make(A.name() + "(x)" + B.name(), A.ring(), names, par, tb.build(), unit);
}

AlgebraPtr make_division_super(int which, const Ring* r, const DivisionParams& p)
{
    AlgebraPtr eps = p.quaternion ? make_quaternion(p.a, p.b) : ground_field(r);
    if (p.quaternion && p.a.ring() != r)
        throw Error("quaternion parameters must lie in " + r->describe());
    std::string nm = "division_super_" + std::to_string(which);
    switch (which) {
    case 1:
        return eps->renamed(nm);
    case 2: {
        if (p.lambda.is_zero())
            throw Error("division superalgebra case 2 needs lambda != 0");
        return tensor_with_quadratic(*eps, p.lambda, 1)->renamed(nm);
    }
    case 3: {
        if (!p.quaternion)
            throw Error("case 3 needs a quaternion epsilon containing the quadratic extension k[u]");
        if (p.u_axis < 1 || p.u_axis > 3)
            throw Error("case 3: u must be i, j or k");
        // even part C(u), odd part S(u); basis elements are homogeneous for u on an axis
        Element u = eps->basis(size_t(p.u_axis));
        std::vector<int> par(4);
        for (size_t i = 0; i < 4; ++i) {
            Element e = eps->basis(i);
            if (multiply(e, u) == multiply(u, e))
                par[i] = 0;
            else if (multiply(e, u) == -multiply(u, e))
                par[i] = 1;
            else
                throw Error("case 3: basis element neither commutes nor anticommutes with u");
        }
        return SuperAlgebra::make(nm, r, eps->basis_names(), par, eps->table(), eps->unit_coords(),
                                  {"u = " + eps->basis_name(size_t(p.u_axis))});
    }
    case 4: {
        if (p.lambda.is_zero())
            throw Error("division superalgebra case 4 needs lambda != 0");
        // basis 1, u, w, uw of M2(k) with u = [[0,1],[lambda,p]], w = [[1,0],[p,-1]]
        Scalar pp = Scalar::constant(r, r->characteristic() == 2 ? 1 : 0);
        const Scalar& lam = p.lambda;
        Scalar one = Scalar::constant(r, 1);
        TableBuilder tb(r, 4);
        for (size_t i = 0; i < 4; ++i) {
            tb.add(0, i, i, one);
            if (i)
                tb.add(i, 0, i, one);
        }
        tb.add(1, 1, 1, pp); // u^2 = p u + lambda
        tb.add(1, 1, 0, lam);
        tb.add(1, 2, 3, one); // u w = uw
        tb.add(1, 3, 3, pp);  // u uw = p uw + lambda w
        tb.add(1, 3, 2, lam);
        tb.add(2, 1, 2, pp); // w u = p w - uw
        tb.add(2, 1, 3, -one);
        tb.add(2, 2, 0, one); // w^2 = 1
        tb.add(2, 3, 0, pp);  // w uw = p - u
        tb.add(2, 3, 1, -one);
        tb.add(3, 1, 2, -lam); // uw u = -lambda w
        tb.add(3, 2, 1, one);  // uw w = u
        tb.add(3, 3, 1, pp);   // uw uw = p u - (p u + lambda) = -lambda
        tb.add(3, 3, 1, -pp);
        tb.add(3, 3, 0, -lam);
        std::vector<Scalar> unit(4, Scalar(r));
        unit[0] = one;
        auto M2 = SuperAlgebra::make("M2(k)", r, {"1", "u", "w", "uw"}, {0, 0, 1, 1}, tb.build(), unit,
                                     {"u = [[0,1],[lambda,p]], w = [[1,0],[p,-1]], p = " + pp.str()});
        if (!p.quaternion)
            return M2->renamed(nm);
        return graded_tensor(*eps, *M2)->renamed(nm, M2->notes());
    }
    default:
        throw Error("division superalgebra case must be 1..4");
    }
}

// ---------------------------------------------------------------- matrix and Jordan superalgebras

AlgebraPtr make_checkerboard(const Ring* r, size_t n, size_t m)
{
    return checkerboard_matrix_super(*ground_field(r), n, m)
        ->renamed("M_{" + std::to_string(n) + "+" + std::to_string(m) + "}");
}

AlgebraPtr make_jordan_mnm(const Ring* r, size_t n, size_t m)
{
    need_not_char2(r, "Jordan superalgebras");
    return plus_algebra(*make_checkerboard(r, n, m))
        ->renamed("M_{" + std::to_string(n) + "," + std::to_string(m) + "}");
}

AlgebraPtr make_jordan_qn(const Ring* r, size_t n)
{
    need_not_char2(r, "Jordan superalgebras");
    if (n == 0)
        throw Error("Q_n needs n >= 1");
    size_t N = n * n;
    std::vector<std::string> names;
    for (int bar = 0; bar < 2; ++bar)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                names.push_back((bar ? "eb" : "e") + std::to_string(i + 1) + std::to_string(j + 1));
    std::vector<int> par(2 * N, 0);
    std::fill(par.begin() + long(N), par.end(), 1);
    // M_n(k[u]) with u odd, u^2 = 1
    TableBuilder tb(r, 2 * N);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l) {
                size_t a = i * n + j, b = j * n + l, c = i * n + l;
                tb.add(a, b, c, 1);
                tb.add(a, b + N, c + N, 1);
                tb.add(a + N, b, c + N, 1);
                tb.add(a + N, b + N, c, 1);
            }
    std::vector<Scalar> unit(2 * N, Scalar(r));
    for (size_t i = 0; i < n; ++i)
        unit[i * n + i] = Scalar::constant(r, 1);
    auto B = SuperAlgebra::make("M_n(k[u])", r, names, par, tb.build(), unit);
    return plus_algebra(*B)->renamed("Q_" + std::to_string(n));
}

namespace {

Element matunit(const SuperAlgebra& M, size_t N, size_t i, size_t j, long c = 1)
{
    Element e(M);
    e[i * N + j] = Scalar::constant(M.ring(), c);
    return e;
}

} // namespace

AlgebraPtr make_jordan_pn(const Ring* r, size_t n)
{
    need_not_char2(r, "Jordan superalgebras");
    if (n < 2)
        throw Error("P_n needs n > 1");
    auto M = make_jordan_mnm(r, n, n);
    size_t N = 2 * n;
    std::vector<Element> vecs;
    std::vector<std::string> names;
    std::vector<int> par;
    auto nm = [](const char* p, size_t i, size_t j) { return p + std::to_string(i + 1) + std::to_string(j + 1); };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            vecs.push_back(matunit(*M, N, i, j) + matunit(*M, N, n + j, n + i));
            names.push_back(nm("e", i, j));
            par.push_back(0);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            vecs.push_back(i == j ? matunit(*M, N, n + i, j) : matunit(*M, N, n + i, j) + matunit(*M, N, n + j, i));
            names.push_back(nm("h", i, j));
            par.push_back(1);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            vecs.push_back(matunit(*M, N, i, n + j) - matunit(*M, N, j, n + i));
            names.push_back(nm("s", i, j));
            par.push_back(1);
        }
    return subalgebra_from_embedding(*M, vecs, names, par, "P_" + std::to_string(n), M->unit());
}

AlgebraPtr make_jordan_osp(const Ring* r, size_t n, size_t m)
{
    need_not_char2(r, "Jordan superalgebras");
    if (n == 0 || m == 0)
        throw Error("osp_{n,2m} needs n >= 1 and m >= 1");
    auto M = make_jordan_mnm(r, n, 2 * m);
    size_t N = n + 2 * m;
    std::vector<Element> vecs;
    std::vector<std::string> names;
    std::vector<int> par;
    auto E = [&](size_t i, size_t j, long c = 1) { return matunit(*M, N, i, j, c); };
    auto nm = [](const char* p, size_t i, size_t j) { return p + std::to_string(i + 1) + std::to_string(j + 1); };
    auto push = [&](Element v, std::string name, int p) {
        vecs.push_back(std::move(v));
        names.push_back(std::move(name));
        par.push_back(p);
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            push(i == j ? E(i, j) : E(i, j) + E(j, i), nm("a", i, j), 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            push(E(n + i, n + j) + E(n + m + j, n + m + i), nm("c", i, j), 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            push(E(n + i, n + m + j) + E(n + j, n + m + i, -1), nm("p", i, j), 0);
            push(E(n + m + i, n + j) + E(n + m + j, n + i, -1), nm("q", i, j), 0);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            push(E(i, n + j) + E(n + m + j, i), nm("b", i, j), 1);
            push(E(i, n + m + j) + E(n + j, i, -1), nm("d", i, j), 1);
        }
    return subalgebra_from_embedding(*M, vecs, names, par,
                                     "osp_{" + std::to_string(n) + "," + std::to_string(2 * m) + "}", M->unit());
}

AlgebraPtr make_jordan_dt(const Scalar& t)
{
    const Ring* r = t.ring();
    need_not_char2(r, "Jordan superalgebras");
    if (t.is_zero())
        throw Error("D_t needs t != 0");
    Scalar half = divide_exact(Scalar::constant(r, 1), Scalar::constant(r, 2));
    TableBuilder tb(r, 4);
    tb.add(0, 0, 0, 1);
    tb.add(1, 1, 1, 1);
    for (size_t i = 0; i < 2; ++i)
        for (size_t o = 2; o < 4; ++o) {
            tb.add(i, o, o, half);
            tb.add(o, i, o, half);
        }
    tb.add(2, 3, 0, 1);
    tb.add(2, 3, 1, t);
    tb.add(3, 2, 0, -1);
    tb.add(3, 2, 1, -t);
    std::vector<Scalar> unit = {Scalar::constant(r, 1), Scalar::constant(r, 1), Scalar(r), Scalar(r)};
    return SuperAlgebra::make("D_t", r, {"e1", "e2", "x", "y"}, {0, 0, 1, 1}, tb.build(), unit);
}

AlgebraPtr make_jordan_superform(const Ring* r, const std::vector<Scalar>& alphas, const std::vector<Scalar>& betas)
{
    need_not_char2(r, "Jordan superalgebras");
    size_t n = alphas.size(), m = betas.size();
    for (auto& a : alphas)
        if (a.ring() != r || a.is_zero())
            throw Error("superform needs nonzero alpha_i in " + r->describe());
    for (auto& b : betas)
        if (b.ring() != r || b.is_zero())
            throw Error("superform needs nonzero beta_i in " + r->describe());
    std::vector<std::string> names = {"e"};
    for (size_t i = 0; i < n; ++i)
        names.push_back("e" + std::to_string(i + 1));
    for (size_t i = 0; i < 2 * m; ++i)
        names.push_back("g" + std::to_string(i + 1));
    std::vector<int> par(1 + n, 0);
    par.resize(1 + n + 2 * m, 1);
    size_t D = names.size();
    TableBuilder tb(r, D);
    for (size_t i = 0; i < D; ++i) {
        tb.add(0, i, i, 1);
        if (i)
            tb.add(i, 0, i, 1);
    }
    for (size_t i = 0; i < n; ++i)
        tb.add(1 + i, 1 + i, 0, alphas[i]);
    for (size_t k = 0; k < m; ++k) {
        size_t a = 1 + n + 2 * k, b = a + 1;
        tb.add(a, b, 0, betas[k]);
        tb.add(b, a, 0, -betas[k]);
    }
    std::vector<Scalar> unit(D, Scalar(r));
    unit[0] = Scalar::constant(r, 1);
    return SuperAlgebra::make("superform(" + std::to_string(n) + "," + std::to_string(m) + ")", r, names, par,
                              tb.build(), unit, {"cross pairing between V0 and V1 taken to be 0"});
}

AlgebraPtr make_jordan_jp3(const Ring* r)
{
    need_not_char2(r, "Jordan superalgebras");
    auto M = make_jordan_mnm(r, 3, 0); // M_3(k)^+, trivially graded
    const size_t N = 3;
    auto E = [&](size_t i, size_t j, long c = 1) { return matunit(*M, N, i, j, c); };
    std::vector<Element> hv = {E(0, 0), E(1, 1), E(2, 2), E(0, 1) + E(1, 0), E(0, 2) + E(2, 0), E(1, 2) + E(2, 1)};
    std::vector<Element> sv = {E(0, 1) + E(1, 0, -1), E(0, 2) + E(2, 0, -1), E(1, 2) + E(2, 1, -1)};
    std::vector<Element> all = hv;
    all.insert(all.end(), sv.begin(), sv.end());
    auto coords = [&](const Element& x) {
        auto c = coordinates_in_span(all, x);
        if (!c)
            throw Error("JP3: product left H3 + S3");
        return *c;
    };
    std::vector<std::string> names = {"e11", "e22", "e33", "e12", "e13", "e23",
                                      "sb12", "sb13", "sb23", "sbb12", "sbb13", "sbb23"};
    std::vector<int> par(6, 0);
    par.resize(12, 1);
    TableBuilder tb(r, 12);
    for (size_t i = 0; i < 6; ++i) {
        for (size_t j = 0; j < 6; ++j) {
            auto c = coords(multiply(hv[i], hv[j]));
            for (size_t k = 0; k < 6; ++k)
                tb.add(i, j, k, c[k]);
        }
        for (size_t j = 0; j < 3; ++j) {
            auto c = coords(multiply(hv[i], sv[j]));
            for (size_t k = 0; k < 3; ++k) {
                tb.add(i, 6 + j, 6 + k, c[6 + k]);
                tb.add(6 + j, i, 6 + k, c[6 + k]);
                tb.add(i, 9 + j, 9 + k, c[6 + k]);
                tb.add(9 + j, i, 9 + k, c[6 + k]);
            }
        }
    }
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            auto c = coords(multiply(sv[i], sv[j]));
            for (size_t k = 0; k < 6; ++k) {
                tb.add(6 + i, 9 + j, k, c[k]);
                tb.add(9 + j, 6 + i, k, -c[k]);
            }
        }
    std::vector<Scalar> unit(12, Scalar(r));
    unit[0] = unit[1] = unit[2] = Scalar::constant(r, 1);
    return SuperAlgebra::make("JP3", r, names, par, tb.build(), unit,
                              {"sbb * sb = -(x o y): supercommutativity of the odd pairing"});
}

AlgebraPtr make_jordan_h3b42(const Ring* r)
{
    need_not_char2(r, "Jordan superalgebras");
    auto B = b42_any(r);
    auto M3 = checkerboard_matrix_super(*B, 3, 0);
    auto J = plus_algebra(*M3);
    const size_t N = 3, d = B->dim();
    auto idx = [&](size_t i, size_t j, size_t b) { return (i * N + j) * d + b; };
    // (a + m)* = abar - m on the basis e11 e12 e21 e22 m1 m2
    std::vector<std::pair<size_t, long>> star = {{3, 1}, {1, -1}, {2, -1}, {0, 1}, {4, -1}, {5, -1}};
    std::vector<Element> vecs;
    std::vector<std::string> names;
    std::vector<int> par;
    Element unit(*J);
    for (size_t i = 0; i < N; ++i) {
        Element v(*J);
        v[idx(i, i, 0)] = Scalar::constant(r, 1);
        v[idx(i, i, 3)] = Scalar::constant(r, 1);
        unit += v;
        vecs.push_back(v);
        names.push_back("1[" + std::to_string(i + 1) + std::to_string(i + 1) + "]");
        par.push_back(0);
    }
    for (auto [i, j] : std::vector<std::pair<size_t, size_t>>{{0, 1}, {0, 2}, {1, 2}})
        for (size_t b = 0; b < d; ++b) {
            Element v(*J);
            v[idx(i, j, b)] = Scalar::constant(r, 1);
            v[idx(j, i, star[b].first)] = Scalar::constant(r, star[b].second);
            vecs.push_back(v);
            names.push_back(B->basis_name(b) + "[" + std::to_string(i + 1) + std::to_string(j + 1) + "]");
            par.push_back(B->parity(b));
        }
    return subalgebra_from_embedding(*J, vecs, names, par, "H3(B(4,2))", unit);
}

// ---------------------------------------------------------------- keys

std::vector<std::string> families()
{
    return {"checkerboard",     "division_super_1", "division_super_2", "division_super_3", "division_super_4",
            "octonion_char2",   "octonion_u_char2", "b12",              "b42",              "b_gamma",
            "jordan_Mnm",       "jordan_Qn",        "jordan_Pn",        "jordan_osp",       "jordan_Dt",
            "jordan_superform", "jordan_JP3",       "jordan_H3B42"};
}

namespace {

struct FamilyInfo {
    long default_char;
    std::vector<std::pair<std::string, std::string>> params; // name, default text
    std::vector<std::pair<std::string, long>> sizes;
};

FamilyInfo info(const std::string& fam, const std::map<std::string, long>& sizes)
{
    auto size_or = [&](const std::string& k, long d) {
        auto it = sizes.find(k);
        return it == sizes.end() ? d : it->second;
    };
    if (fam == "octonion_char2")
        return {2, {{"mu", "mu"}, {"beta", "beta"}, {"gamma", "gamma"}}, {}};
    if (fam == "octonion_u_char2")
        return {2, {{"mu", "mu"}, {"beta", "beta"}, {"gamma", "gamma"}, {"alpha", "alpha"}}, {}};
    if (fam == "b12" || fam == "b42")
        return {3, {}, {}};
    if (fam == "b_gamma")
        return {3, {{"gamma", "gamma"}}, {{"trunc", 3}}};
    if (fam == "checkerboard" || fam == "jordan_Mnm" || fam == "jordan_osp")
        return {0, {}, {{"n", 1}, {"m", 1}}};
    if (fam == "jordan_Qn" || fam == "jordan_Pn")
        return {0, {}, {{"n", 2}}};
    if (fam == "jordan_Dt")
        return {0, {{"t", "t"}}, {}};
    if (fam == "jordan_superform") {
        FamilyInfo fi{0, {}, {{"n", 2}, {"m", 1}}};
        for (long i = 1; i <= size_or("n", 2); ++i)
            fi.params.push_back({"alpha" + std::to_string(i), "alpha" + std::to_string(i)});
        for (long i = 1; i <= size_or("m", 1); ++i)
            fi.params.push_back({"beta" + std::to_string(i), "beta" + std::to_string(i)});
        return fi;
    }
    if (fam == "jordan_JP3" || fam == "jordan_H3B42")
        return {3, {}, {}};
    if (fam.rfind("division_super_", 0) == 0 && fam.size() == 16 && fam[15] >= '1' && fam[15] <= '4')
        return {0, {{"a", "-1"}, {"b", "-1"}, {"lambda", "lambda"}}, {{"quat", fam[15] == '3' ? 1 : 0}, {"u", 1}}};
    throw Error("unknown catalog family '" + fam + "'");
}

std::vector<std::string> identifiers(const std::string& s)
{
    std::vector<std::string> out;
    for (size_t i = 0; i < s.size();) {
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back(s.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

} // namespace

AlgebraPtr build(const CatalogKey& key)
{
    FamilyInfo fi = info(key.family, key.sizes);
    for (auto& [k, v] : key.sizes) {
        bool ok = false;
        for (auto& [name, d] : fi.sizes)
            ok = ok || name == k;
        if (!ok)
            throw Error("family " + key.family + " has no size '" + k + "'");
        if (v < 0)
            throw Error("size '" + k + "' must be non-negative");
    }
    std::map<std::string, std::string> text;
    for (auto& [name, d] : fi.params)
        text[name] = d;
    for (auto& [k, v] : key.params) {
        if (!text.count(k))
            throw Error("family " + key.family + " has no parameter '" + k + "'");
        text[k] = v;
    }
    long ch = key.characteristic >= 0 ? key.characteristic : fi.default_char;
    if (ch < 0 || ch > (1L << 31) || (ch != 0 && !is_prime(uint64_t(ch))))
        throw Error("characteristic must be 0 or a prime");
    // ring parameters: identifiers in parameter texts, in family order
    std::vector<std::string> vars;
    for (auto& [name, d] : fi.params)
        for (auto& id : identifiers(text[name]))
            if (std::find(vars.begin(), vars.end(), id) == vars.end())
                vars.push_back(id);
    const Ring* r = Ring::get(uint32_t(ch), vars);
    auto P = [&](const std::string& name) { return Scalar::parse(r, text.at(name)); };
    auto S = [&](const std::string& name) {
        auto it = key.sizes.find(name);
        if (it != key.sizes.end())
            return it->second;
        for (auto& [n, d] : fi.sizes)
            if (n == name)
                return d;
        return 0L;
    };
    const std::string& f = key.family;
    AlgebraPtr A;
    if (f == "octonion_char2")
        A = make_octonion_super(P("mu"), P("beta"), P("gamma"));
    else if (f == "octonion_u_char2")
        A = make_octonion_u(P("mu"), P("beta"), P("gamma"), P("alpha"));
    else if (f == "b12")
        A = make_b12(r);
    else if (f == "b42")
        A = make_b42(r);
    else if (f == "b_gamma")
        A = make_b_gamma(int(S("trunc")), P("gamma"));
    else if (f == "checkerboard")
        A = make_checkerboard(r, size_t(S("n")), size_t(S("m")));
    else if (f == "jordan_Mnm")
        A = make_jordan_mnm(r, size_t(S("n")), size_t(S("m")));
    else if (f == "jordan_Qn")
        A = make_jordan_qn(r, size_t(S("n")));
    else if (f == "jordan_Pn")
        A = make_jordan_pn(r, size_t(S("n")));
    else if (f == "jordan_osp")
        A = make_jordan_osp(r, size_t(S("n")), size_t(S("m")));
    else if (f == "jordan_Dt")
        A = make_jordan_dt(P("t"));
    else if (f == "jordan_superform") {
        std::vector<Scalar> al, be;
        for (long i = 1; i <= S("n"); ++i)
            al.push_back(P("alpha" + std::to_string(i)));
        for (long i = 1; i <= S("m"); ++i)
            be.push_back(P("beta" + std::to_string(i)));
        A = make_jordan_superform(r, al, be);
    } else if (f == "jordan_JP3")
        A = make_jordan_jp3(r);
    else if (f == "jordan_H3B42")
        A = make_jordan_h3b42(r);
    else {
        DivisionParams dp;
        dp.quaternion = S("quat") != 0;
        dp.a = P("a");
        dp.b = P("b");
        dp.lambda = P("lambda");
        dp.u_axis = int(S("u"));
        A = make_division_super(f.back() - '0', r, dp);
    }
    return A;
}

} // namespace salg::catalog
