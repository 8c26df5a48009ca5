#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superalg/ring.hpp"
#include "test_util.hpp"

using namespace salg;

TEST_CASE("ring descriptors are validated and interned")
{
    CHECK(Ring::get(0) == Ring::get(0));
    CHECK(Ring::get(3, {"a", "b"}) == Ring::get(3, {"a", "b"}));
    CHECK(Ring::get(3, {"a", "b"}) != Ring::get(3, {"b", "a"}));
    CHECK_THROWS_AS(Ring::get(4), Error);
    CHECK_THROWS_AS(Ring::get(5, {"x", "x"}), Error);
    CHECK_THROWS_AS(Ring::get(5, {""}), Error);
    CHECK(Ring::get(2, {"mu", "z"})->describe() == "GF(2)[mu,z]");
}

TEST_CASE("basic arithmetic examples")
{
    auto r2 = Ring::get(2, {"z"});
    auto z = Scalar::var(r2, "z");
    CHECK((z * z + z * z).is_zero());

    auto ro = Ring::get(2, {"mu", "beta", "gamma", "z"});
    CHECK((Scalar::var(ro, "mu") * Scalar::var(ro, "z")).str() == "mu*z");

    auto q = Ring::get(0);
    auto a = Scalar::rational(q, mpq_class(2, 3)) * Scalar::rational(q, mpq_class(3, 4));
    CHECK(a.rational_value() == mpq_class(1, 2));
    CHECK(a.str() == "1/2");

    CHECK_THROWS_AS(Scalar::constant(q, 1) + Scalar::constant(Ring::get(5), 1), Error);
}

TEST_CASE("exact division")
{
    auto f5 = Ring::get(5);
    CHECK(divide_exact(Scalar::constant(f5, 1), Scalar::constant(f5, 2)).residue() == 3);

    auto r = Ring::get(0, {"mu", "z"});
    auto z = Scalar::var(r, "z"), mu = Scalar::var(r, "mu");
    CHECK(divide_exact(z * z * mu, z) == z * mu);
    CHECK(divide_exact(z * z - mu * mu, z - mu) == z + mu);
    CHECK_THROWS_AS(divide_exact(z * z + mu, z), Error);
    CHECK_THROWS_AS(divide_exact(z, Scalar(r)), Error);

    auto f2 = Ring::get(2);
    CHECK_THROWS_AS(divide_exact(Scalar::constant(f2, 1), Scalar::constant(f2, 2)), Error);
}

TEST_CASE("parsing and printing")
{
    auto r = Ring::get(0, {"m", "z"});
    auto s = Scalar::parse(r, "2*m*z^3 - 1");
    CHECK(s.str() == "2*m*z^3 - 1");
    CHECK(Scalar::parse(r, s.str()) == s);
    CHECK(Scalar::parse(r, "(m+z)^2") == Scalar::parse(r, "m^2 + 2*m*z + z^2"));
    CHECK(Scalar::parse(r, "1/2*z").str() == "1/2*z");
    CHECK(Scalar::parse(r, "-z").str() == "-z");
    CHECK_THROWS_AS(Scalar::parse(r, "w"), Error);
    CHECK_THROWS_AS(Scalar::parse(r, "z +"), Error);

    auto r3 = Ring::get(3, {"g"});
    CHECK(Scalar::parse(r3, "-1").str() == "2");
    CHECK(Scalar::parse(r3, "-g + 4").str() == "2*g + 1");
}

TEST_CASE("substitution")
{
    auto r = Ring::get(2, {"nu", "mu", "z"});
    auto t = Ring::get(2, {"mu", "z"});
    auto nu = Scalar::var(r, "nu"), z = Scalar::var(r, "z");
    auto mu_t = Scalar::var(t, "mu"), z_t = Scalar::var(t, "z");
    CHECK(substitute(nu * z, {{"nu", mu_t * z_t}}) == mu_t * z_t * z_t);

    auto ra = Ring::get(0, {"alpha1"});
    auto a1 = Scalar::var(ra, "alpha1");
    CHECK(substitute(a1, {}) == a1);
    CHECK_THROWS_AS(substitute(a1, {{"nope", a1}}), Error);

    auto rs = Ring::get(0, {"lambda", "delta", "z"});
    auto rt = Ring::get(0, {"beta", "gamma", "z"});
    auto lam = Scalar::var(rs, "lambda"), del = Scalar::var(rs, "delta"), zz = Scalar::var(rs, "z");
    auto beta = Scalar::var(rt, "beta"), gamma = Scalar::var(rt, "gamma"), zt = Scalar::var(rt, "z");
    auto img = substitute(lam * del * del * zz * zz, {{"lambda", beta * zt}, {"delta", gamma * zt}});
    CHECK(img == beta * gamma * gamma * zt.pow(5));
}

TEST_CASE("random specialization")
{
    auto r = Ring::get(0, {"mu", "beta", "gamma", "z"});
    CHECK(random_specialize(Scalar(r), 3, 5) == 0);
    auto prod = Scalar::parse(r, "mu*beta*gamma");
    for (uint64_t seed = 0; seed < 50; ++seed)
        CHECK(random_specialize(prod, seed, 5, {"mu", "beta", "gamma"}) != 0);
    CHECK(random_specialize(prod, 7, 5, {"mu", "beta", "gamma"}) ==
          random_specialize(prod, 7, 5, {"mu", "beta", "gamma"}));
    auto zz = Scalar::parse(r, "z^2 - z^2");
    CHECK(random_specialize(zz, 1, 3) == 0);

    // two distinct nonzero residues do not exist in GF(2)
    CHECK_THROWS_AS(random_specialize(prod, 1, 2, {}, {"mu", "beta"}), Error);
    CHECK_THROWS_AS(random_specialize(prod, 1, 4), Error);
    auto half = Scalar::parse(r, "1/5*z");
    CHECK_THROWS_AS(random_specialize(half, 1, 5), Error);
    CHECK_THROWS_AS(random_specialize(Scalar::var(Ring::get(3, {"z"}), "z"), 1, 5), Error);
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(2024);
    for (uint32_t p : {0u, 2u, 3u, 5u}) {
        auto r = Ring::get(p, {"a", "b", "c"});
        for (int it = 0; it < 1000; ++it) {
            auto x = testutil::random_scalar(r, rng), y = testutil::random_scalar(r, rng),
                 z = testutil::random_scalar(r, rng);
            REQUIRE(((x + y) + z) == (x + (y + z)));
            REQUIRE((x * y) == (y * x));
            REQUIRE((x * (y + z)) == (x * y + x * z));
            REQUIRE(((x * y) * z) == (x * (y * z)));
            REQUIRE((x - x).is_zero());
            if (!y.is_zero())
                REQUIRE(divide_exact(x * y, y) == x);
        }
    }
}

TEST_CASE("substitution is a ring homomorphism")
{
    std::mt19937_64 rng(77);
    auto src = Ring::get(0, {"nu", "lam", "z"});
    auto dst = Ring::get(0, {"mu", "beta", "z"});
    std::map<std::string, Scalar> b{{"nu", Scalar::parse(dst, "mu*z")}, {"lam", Scalar::parse(dst, "beta*z + 1")}};
    for (int it = 0; it < 300; ++it) {
        auto x = testutil::random_scalar(src, rng), y = testutil::random_scalar(src, rng);
        REQUIRE(substitute(x * y, b) == substitute(x, b) * substitute(y, b));
        REQUIRE(substitute(x + y, b) == substitute(x, b) + substitute(y, b));
    }
}

TEST_CASE("zero scalars specialize to zero")
{
    std::mt19937_64 rng(5);
    auto r = Ring::get(0, {"a", "b"});
    for (int it = 0; it < 200; ++it) {
        auto x = testutil::random_scalar(r, rng);
        auto zero = x * x - x * x;
        REQUIRE(zero.is_zero());
        REQUIRE(random_specialize(zero, it, 7) == 0);
        // evaluation is a homomorphism
        auto y = testutil::random_scalar(r, rng);
        auto sp = make_specialization(r, it, 7);
        REQUIRE((x * y).evaluate(sp) == uint64_t(x.evaluate(sp)) * y.evaluate(sp) % 7);
    }
}
