#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "superalg/catalog.hpp"
#include "superalg/identity.hpp"
#include "test_util.hpp"

using namespace salg;
using namespace salg::catalog;

namespace {

using testutil::grassmann2;
using testutil::random_rebase;

const Ring* Q = Ring::get(0);
const Ring* F3 = Ring::get(3);

Scalar c(const Ring* r, long v) { return Scalar::constant(r, v); }

AlgebraPtr octonion()
{
    auto r = Ring::get(2, {"mu", "beta", "gamma"});
    return make_octonion_super(Scalar::var(r, "mu"), Scalar::var(r, "beta"), Scalar::var(r, "gamma"));
}

AlgebraPtr permuted(const SuperAlgebra& A, const std::vector<size_t>& order)
{
    std::vector<Element> vecs;
    std::vector<std::string> names;
    std::vector<int> par;
    for (size_t i : order) {
        vecs.push_back(A.basis(i));
        names.push_back(A.basis_name(i));
        par.push_back(A.parity(i));
    }
    return subalgebra_from_embedding(A, vecs, names, par, A.name(), A.unit());
}

} // namespace

TEST_CASE("koszul sign")
{
    CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_sign({1, 0}, {1, 0}) == 1);
    CHECK(koszul_sign({1, 2, 0}, {1, 1, 0}) == -1);
    CHECK_THROWS_AS(koszul_sign({0, 1}, {1}), Error);
    CHECK_THROWS_AS(koszul_sign({0, 0}, {1, 1}), Error);
}

TEST_CASE("identity text round trip")
{
    for (auto& s : builtin_specs()) {
        auto text = serialize_identity(s);
        auto back = parse_identity(text);
        CHECK(serialize_identity(back) == text);
        CHECK(back.monomials.size() == s.monomials.size());
    }
    CHECK(builtin_spec("super-jordan").arity == 4);
    CHECK(builtin_spec("super-jordan").monomials.size() == 12);
    auto s = parse_identity("identity t\narity 3\n+ (1 2 3) ((1 2) 3) koszul\n");
    CHECK(s.monomials[0].koszul);
    CHECK(s.monomials[0].bracketing.str() == "((1 2) 3)");
    CHECK_THROWS_AS(parse_identity("identity t\narity 3\n+ (1 2) ((1 2) 3)\n"), Error);
    CHECK_THROWS_AS(parse_identity("identity t\narity 3\n+ (1 2 2) ((1 2) 3)\n"), Error);
    CHECK_THROWS_AS(parse_identity("identity t\narity 3\n+ (1 2 3) ((1 3) 2)\n"), Error);
    CHECK_THROWS_AS(parse_identity("identity t\narity 3\n+ (1 2 3) ((1 2) 3) sometimes\n"), Error);
    CHECK_THROWS_AS(parse_identity("identity t\narity 2\n"), Error);
    CHECK_THROWS_AS(builtin_spec("nope"), Error);
}

TEST_CASE("octonion sweeps")
{
    auto O = octonion();
    for (const char* n : {"alt-left", "alt-right"}) {
        auto rep = check_identity(*O, builtin_spec(n));
        CHECK(rep.pass);
        CHECK(rep.tuples_checked == 512);
    }
    auto rep = check_identity(*O, builtin_spec("assoc"));
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.residual);
    CHECK_FALSE(rep.residual->is_zero());
    // the residual at the reported tuple is the associator there
    auto w = rep.witness;
    CHECK(*rep.residual == associator(O->basis(w[0]), O->basis(w[1]), O->basis(w[2])));
    CHECK(associator(O->basis(1), O->basis(2), O->basis(4)) == O->basis(6));
}

TEST_CASE("char 2 and 3 alternative algebras are not associative")
{
    auto r = Ring::get(2, {"mu", "beta", "gamma", "alpha"});
    auto v = [&](const char* n) { return Scalar::var(r, n); };
    auto g = Scalar::var(Ring::get(3, {"gamma"}), "gamma");
    std::vector<AlgebraPtr> algs = {octonion(), make_octonion_u(v("mu"), v("beta"), v("gamma"), v("alpha")),
                                    make_b12(F3), make_b42(F3), make_b_gamma(3, g)};
    for (auto& A : algs) {
        CAPTURE(A->name());
        CHECK(check_identity(*A, builtin_spec("alt-left")).pass);
        CHECK(check_identity(*A, builtin_spec("alt-right")).pass);
        auto as = check_identity(*A, builtin_spec("assoc"));
        CHECK_FALSE(as.pass);
        CHECK(as.witness.size() == 3);
    }
}

TEST_CASE("Jordan families are supercommutative and super-Jordan")
{
    auto t = Scalar::var(Ring::get(0, {"t"}), "t");
    std::vector<AlgebraPtr> algs = {make_jordan_mnm(Q, 1, 1),
                                    make_jordan_mnm(Q, 2, 1),
                                    make_jordan_qn(Q, 2),
                                    make_jordan_pn(Q, 2),
                                    make_jordan_osp(Q, 1, 1),
                                    make_jordan_osp(Q, 2, 1),
                                    make_jordan_dt(t),
                                    make_jordan_superform(Q, {c(Q, 2), c(Q, 5)}, {c(Q, 3)}),
                                    make_jordan_jp3(F3),
                                    make_jordan_h3b42(F3)};
    for (auto& A : algs) {
        CAPTURE(A->name());
        CHECK(check_identity(*A, builtin_spec("supercomm")).pass);
        auto rep = check_identity(*A, builtin_spec("super-jordan"));
        CHECK(rep.pass);
        if (rep.pass)
            CHECK(rep.tuples_checked == uint64_t(A->dim() * A->dim() * A->dim() * A->dim()));
    }
}

TEST_CASE("JP3 and H3(B(4,2)) fail the Jordan identity outside characteristic 3")
{
    for (const Ring* r : {Q, Ring::get(5)}) {
        auto j = check_identity(*make_jordan_jp3(r), builtin_spec("super-jordan"));
        CHECK_FALSE(j.pass);
        CHECK(j.witness == std::vector<size_t>{0, 6, 8, 9});
        auto h = check_identity(*make_jordan_h3b42(r), builtin_spec("super-jordan"));
        CHECK_FALSE(h.pass);
        CHECK(h.witness == std::vector<size_t>{0, 7, 19, 8});
    }
}

TEST_CASE("bootstrap: plus algebras of random associative superalgebras are Jordan")
{
    std::mt19937_64 rng(2024);
    const Ring* F7 = Ring::get(7);
    std::vector<AlgebraPtr> seeds = {
        make_checkerboard(F7, 1, 1), make_checkerboard(F7, 2, 1), make_checkerboard(F7, 1, 2), grassmann2(F7),
        tensor_with_quadratic(*ground_field(F7), c(F7, 3), 1),
        graded_tensor(*grassmann2(F7), *tensor_with_quadratic(*ground_field(F7), c(F7, 2), 1)),
        graded_tensor(*make_checkerboard(F7, 1, 1), *tensor_with_quadratic(*ground_field(F7), c(F7, 5), 1)),
    };
    int count = 0;
    for (int t = 0; t < 20; ++t) {
        auto A = random_rebase(*seeds[size_t(t) % seeds.size()], rng);
        CAPTURE(A->name());
        REQUIRE(check_identity(*A, builtin_spec("assoc")).pass);
        auto P = plus_algebra(*A);
        CHECK(check_identity(*P, builtin_spec("supercomm")).pass);
        CHECK(check_identity(*P, builtin_spec("super-jordan")).pass);
        ++count;
    }
    CHECK(count == 20);
}

TEST_CASE("mutated tables are caught")
{
    auto B = make_b42(F3);
    auto tab = B->table();
    // perturb m1 * e12
    size_t i = size_t(B->index_of("m1")), j = size_t(B->index_of("e12"));
    auto& row = tab[i * B->dim() + j];
    REQUIRE_FALSE(row.empty());
    row[0].c = row[0].c + c(F3, 1);
    auto M = SuperAlgebra::make("B(4,2)*", F3, B->basis_names(), B->parities(), tab, B->unit_coords());
    auto rep = check_identity(*M, builtin_spec("alt-left"));
    CHECK_FALSE(rep.pass);
    CHECK(rep.residual);
    CHECK_FALSE(rep.residual->is_zero());
}

TEST_CASE("sweeps do not depend on basis order")
{
    std::mt19937_64 rng(3);
    for (auto A : {make_b42(F3), make_jordan_qn(Q, 2), make_jordan_jp3(Q)}) {
        std::vector<size_t> order(A->dim());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        auto B = permuted(*A, order);
        for (auto& s : builtin_specs()) {
            auto a = check_identity(*A, s), b = check_identity(*B, s);
            CHECK(a.pass == b.pass);
            auto a2 = check_identity(*A, s);
            CHECK(a2.witness == a.witness);
            CHECK(a2.tuples_checked == a.tuples_checked);
        }
    }
}
