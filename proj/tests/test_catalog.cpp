#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superalg/catalog.hpp"

using namespace salg;
using namespace salg::catalog;

namespace {

const Ring* Q = Ring::get(0);
const Ring* F3 = Ring::get(3);

Scalar c(const Ring* r, long v) { return Scalar::constant(r, v); }

std::pair<size_t, size_t> split(const SuperAlgebra& A)
{
    size_t odd = 0;
    for (int p : A.parities())
        odd += size_t(p);
    return {A.dim() - odd, odd};
}

using M2 = std::array<std::array<Scalar, 2>, 2>;

M2 mm(const M2& a, const M2& b)
{
    M2 out = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

} // namespace

TEST_CASE("dimensions and grading splits")
{
    auto r2 = Ring::get(2, {"mu", "beta", "gamma", "alpha"});
    auto v = [&](const char* n) { return Scalar::var(r2, n); };
    CHECK(split(*make_octonion_super(v("mu"), v("beta"), v("gamma"))) == std::pair<size_t, size_t>{4, 4});
    CHECK(make_octonion_u(v("mu"), v("beta"), v("gamma"), v("alpha"))->dim() == 16);
    CHECK(split(*make_b12(F3)) == std::pair<size_t, size_t>{1, 2});
    CHECK(split(*make_b42(F3)) == std::pair<size_t, size_t>{4, 2});
    CHECK(split(*make_b_gamma(3, c(F3, 1))) == std::pair<size_t, size_t>{3, 3});
    for (size_t n = 1; n <= 3; ++n)
        for (size_t m = 0; m <= 2; ++m)
            CHECK(make_jordan_mnm(Q, n, m)->dim() == (n + m) * (n + m));
    for (size_t n = 1; n <= 3; ++n)
        CHECK(split(*make_jordan_qn(Q, n)) == std::pair<size_t, size_t>{n * n, n * n});
    for (size_t n = 2; n <= 3; ++n)
        CHECK(split(*make_jordan_pn(Q, n)) == std::pair<size_t, size_t>{n * n, n * n});
    for (size_t n = 1; n <= 3; ++n)
        for (size_t m = 1; m <= 2; ++m)
            CHECK(split(*make_jordan_osp(Q, n, m)) ==
                  std::pair<size_t, size_t>{n * (n + 1) / 2 + m * (2 * m - 1), 2 * n * m});
    CHECK(make_jordan_dt(c(Q, 5))->dim() == 4);
    CHECK(split(*make_jordan_superform(Q, {c(Q, 1), c(Q, 2)}, {c(Q, 3)})) == std::pair<size_t, size_t>{3, 2});
    CHECK(split(*make_jordan_jp3(Q)) == std::pair<size_t, size_t>{6, 6});
    CHECK(make_jordan_h3b42(F3)->dim() == 21);
    CHECK(make_jordan_h3b42(Ring::get(5))->dim() == 21);
}

TEST_CASE("constraint violations")
{
    auto r3 = Ring::get(3, {"beta"});
    CHECK_THROWS_AS(make_octonion_super(c(r3, 1), c(r3, 1), c(r3, 1)), Error);
    auto r2 = Ring::get(2);
    CHECK_THROWS_AS(make_octonion_super(c(r2, 1), c(r2, 0), c(r2, 1)), Error);
    CHECK_THROWS_AS(make_octonion_u(c(r2, 1), c(r2, 1), c(r2, 1), c(r2, 0)), Error);
    CHECK_THROWS_AS(make_b12(Q), Error);
    CHECK_THROWS_AS(make_b42(Ring::get(5)), Error);
    CHECK_THROWS_AS(make_b_gamma(4, c(F3, 1)), Error);
    CHECK_THROWS_AS(make_b_gamma(3, c(Q, 1)), Error);
    CHECK_THROWS_AS(make_jordan_dt(c(Q, 0)), Error);
    CHECK_THROWS_AS(make_jordan_pn(Q, 1), Error);
    CHECK_THROWS_AS(make_jordan_superform(Q, {c(Q, 0)}, {}), Error);
    CHECK_THROWS_AS(make_jordan_superform(Q, {}, {c(Q, 0)}), Error);
    CHECK_THROWS_AS(make_jordan_mnm(r2, 1, 1), Error);
    DivisionParams dp;
    dp.lambda = c(Q, 0);
    CHECK_THROWS_AS(make_division_super(2, Q, dp), Error);
    CHECK_THROWS_AS(make_division_super(4, Q, dp), Error);
    CHECK_THROWS_AS(make_division_super(5, Q, dp), Error);
}

TEST_CASE("B(4,2)")
{
    auto B = make_b42(F3);
    auto b = [&](const char* n) { return B->basis(n); };
    CHECK(multiply(b("m1"), b("m2")) == b("e11"));
    CHECK(multiply(b("m2"), b("m1")) == -b("e22"));
    CHECK(multiply(b("m1"), b("m1")) == -b("e21"));
    CHECK(multiply(b("m2"), b("m2")) == b("e12"));
    CHECK(multiply(b("m1"), b("e12")) == -b("m2"));
    CHECK(multiply(b("e12"), b("m1")) == b("m2"));
    CHECK(multiply(b("e21"), b("m1")).is_zero());
    // m a = abar m with the symplectic involution, and abar-bar = a
    std::map<std::string, std::pair<std::string, long>> bar = {
        {"e11", {"e22", 1}}, {"e12", {"e12", -1}}, {"e21", {"e21", -1}}, {"e22", {"e11", 1}}};
    for (auto& [n, img] : bar) {
        auto& back = bar.at(img.first);
        CHECK(back.first == n);
        CHECK(back.second * img.second == 1);
        auto a = b(img.first.c_str()).scaled(c(F3, img.second));
        for (const char* m : {"m1", "m2"})
            CHECK(multiply(b(m), b(n.c_str())) == multiply(a, b(m)));
    }
}

TEST_CASE("B(Gamma) products")
{
    auto g = Scalar::var(Ring::get(3, {"gamma"}), "gamma");
    auto B = make_b_gamma(3, g);
    auto b = [&](const char* n) { return B->basis(n); };
    CHECK(multiply(b("1b"), b("1b")) == b("1").scaled(g));
    CHECK(multiply(b("1b"), b("xb")) == b("x").scaled(g) + b("1"));
    CHECK(multiply(b("x"), b("xb")) == b("x2b"));
    CHECK(multiply(b("xb"), b("x")) == b("x2b"));
    // xbar ybar with x = x, y = x: gamma x^2 + 2x + x = gamma x^2 in char 3
    CHECK(multiply(b("xb"), b("xb")) == b("x2").scaled(g));
    CHECK(multiply(b("x2"), b("x")).is_zero());
}

TEST_CASE("Jordan examples")
{
    auto t = Scalar::var(Ring::get(0, {"t"}), "t");
    auto D = make_jordan_dt(t);
    auto half = Scalar::rational(t.ring(), mpq_class(1, 2));
    CHECK(multiply(D->basis("x"), D->basis("y")) == D->basis("e1") + D->basis("e2").scaled(t));
    CHECK(multiply(D->basis("e1"), D->basis("x")) == D->basis("x").scaled(half));
    CHECK(multiply(D->basis("y"), D->basis("x")) == -(D->basis("e1") + D->basis("e2").scaled(t)));

    auto J = make_jordan_jp3(Q);
    for (const char* a : {"sb12", "sb13", "sb23"})
        for (const char* b : {"sb12", "sb13", "sb23"}) {
            CHECK(multiply(J->basis(a), J->basis(b)).is_zero());
            std::string a2 = std::string("sbb") + (a + 2), b2 = std::string("sbb") + (b + 2);
            CHECK(multiply(J->basis(a2), J->basis(b2)).is_zero());
            CHECK(multiply(J->basis(a), J->basis(b2)) == -multiply(J->basis(b2), J->basis(a)));
        }
    auto half0 = Scalar::rational(Q, mpq_class(1, 2));
    // s12 o s12 = -(E11 + E22)
    CHECK(multiply(J->basis("sb12"), J->basis("sbb12")) == -(J->basis("e11") + J->basis("e22")));
    CHECK(multiply(J->basis("e12"), J->basis("sb12")).is_zero());
    CHECK(multiply(J->basis("e11"), J->basis("sbb12")) == J->basis("sbb12").scaled(half0));

    auto S = make_jordan_superform(Q, {c(Q, 2)}, {c(Q, 3)});
    CHECK(multiply(S->basis("g1"), S->basis("g2")) == S->basis("e").scaled(c(Q, 3)));
    CHECK(multiply(S->basis("g2"), S->basis("g1")) == S->basis("e").scaled(c(Q, -3)));
    CHECK(multiply(S->basis("e1"), S->basis("e1")) == S->basis("e").scaled(c(Q, 2)));
    CHECK(multiply(S->basis("e1"), S->basis("g1")).is_zero());
}

TEST_CASE("M_{n,m} is the plus algebra of the checkerboard")
{
    for (const Ring* r : {Q, Ring::get(5)})
        for (size_t n = 1; n <= 2; ++n)
            for (size_t m = 0; m <= 2; ++m) {
                auto J = make_jordan_mnm(r, n, m);
                auto P = plus_algebra(*checkerboard_matrix_super(*ground_field(r), n, m));
                REQUIRE(J->dim() == P->dim());
                CHECK(J->parities() == P->parities());
                for (size_t i = 0; i < J->table().size(); ++i) {
                    auto& a = J->table()[i];
                    auto& b = P->table()[i];
                    REQUIRE(a.size() == b.size());
                    for (size_t k = 0; k < a.size(); ++k) {
                        CHECK(a[k].k == b[k].k);
                        CHECK(a[k].c == b[k].c);
                    }
                }
            }
}

TEST_CASE("osp closure over all pairs")
{
    // subalgebra_from_embedding already rejects unclosed spans; re-check the block shapes
    for (size_t n = 1; n <= 2; ++n)
        for (size_t m = 1; m <= 2; ++m) {
            auto A = make_jordan_osp(Ring::get(7), n, m);
            for (size_t i = 0; i < A->dim(); ++i)
                for (size_t j = 0; j < A->dim(); ++j) {
                    auto p = multiply(A->basis(i), A->basis(j));
                    auto par = p.parity();
                    REQUIRE(par);
                    if (!p.is_zero())
                        CHECK(*par == (A->parity(i) ^ A->parity(j)));
                }
        }
}

TEST_CASE("division superalgebras")
{
    DivisionParams dp;
    dp.lambda = c(Q, 3);
    auto D1 = make_division_super(1, Q, dp);
    CHECK(D1->dim() == 1);
    CHECK(D1->parity(0) == 0);
    auto D2 = make_division_super(2, Q, dp);
    CHECK(split(*D2) == std::pair<size_t, size_t>{1, 1});
    auto u = D2->basis(1);
    CHECK(multiply(u, u) == D2->basis(0).scaled(c(Q, 3)));

    dp.quaternion = true;
    dp.a = c(Q, -1);
    dp.b = c(Q, -1);
    auto D3 = make_division_super(3, Q, dp);
    CHECK(D3->parities() == std::vector<int>{0, 0, 1, 1});
    dp.u_axis = 2;
    CHECK(make_division_super(3, Q, dp)->parities() == std::vector<int>{0, 1, 0, 1});
    auto D4q = make_division_super(4, Q, dp);
    CHECK(split(*D4q) == std::pair<size_t, size_t>{8, 8});

    // case 4 table against the 2x2 matrices u = [[0,1],[lambda,p]], w = [[1,0],[p,-1]]
    for (const Ring* r : {Q, Ring::get(2), Ring::get(5)}) {
        DivisionParams d4;
        d4.lambda = c(r, r->characteristic() == 2 ? 1 : 3);
        auto D4 = make_division_super(4, r, d4);
        CHECK(D4->parities() == std::vector<int>{0, 0, 1, 1});
        Scalar p = c(r, r->characteristic() == 2 ? 1 : 0), z = c(r, 0), one = c(r, 1);
        M2 I{{{one, z}, {z, one}}}, U{{{z, one}, {d4.lambda, p}}}, W{{{one, z}, {p, -one}}};
        std::vector<M2> mats = {I, U, W, mm(U, W)};
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) {
                auto prod = multiply(D4->basis(i), D4->basis(j));
                M2 want = mm(mats[i], mats[j]), got{{{z, z}, {z, z}}};
                for (size_t k = 0; k < 4; ++k)
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            got[a][b] += prod[k] * mats[k][a][b];
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        CHECK(got[a][b] == want[a][b]);
            }
    }
}

TEST_CASE("catalog keys")
{
    for (auto& f : families()) {
        CatalogKey k{f, {}, {}, -1};
        if (f == "jordan_Dt")
            k.params["t"] = "2";
        auto A = build(k);
        CHECK(A->dim() > 0);
        if (f.rfind("jordan", 0) == 0 || f == "checkerboard")
            CHECK(A->ring()->characteristic() != 2);
    }
    auto O = build({"octonion_char2", {{"mu", "0"}}, {}, -1});
    CHECK(O->ring()->params() == std::vector<std::string>{"beta", "gamma"});
    CHECK(multiply(O->basis("e1"), O->basis("e1")) == O->basis("e1"));
    CHECK(build({"jordan_osp", {}, {{"n", 2}, {"m", 1}}, 5})->dim() == 8);
    CHECK(build({"jordan_superform", {{"alpha1", "1"}}, {{"n", 1}, {"m", 2}}, 0})->ring()->params() ==
          std::vector<std::string>{"beta1", "beta2"});
    CHECK_THROWS_AS(build({"nope", {}, {}, -1}), Error);
    CHECK_THROWS_AS(build({"b12", {}, {}, 5}), Error);
    CHECK_THROWS_AS(build({"b12", {{"x", "1"}}, {}, -1}), Error);
    CHECK_THROWS_AS(build({"checkerboard", {}, {{"q", 1}}, -1}), Error);
    CHECK_THROWS_AS(build({"checkerboard", {}, {}, 4}), Error);
}
