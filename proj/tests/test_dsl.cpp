#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "superalg/catalog.hpp"
#include "superalg/dsl.hpp"
#include "test_util.hpp"

using namespace salg;
using namespace salg::catalog;

namespace {

const char* B12_DOC = "char 3\n"
                      "basis 1 x y\n"
                      "odd x y\n"
                      "mul x y = 1\n"
                      "mul y x = -1*1\n"
                      "unit 1\n";

std::vector<AlgebraPtr> catalog_exports()
{
    std::vector<AlgebraPtr> out;
    for (auto& f : families()) {
        CatalogKey k{f, {}, {}, -1};
        if (f == "jordan_Dt")
            k.params["t"] = "t";
        out.push_back(build(k));
    }
    out.push_back(build({"checkerboard", {}, {{"n", 2}, {"m", 2}}, 5}));
    out.push_back(build({"jordan_osp", {}, {{"n", 2}, {"m", 1}}, 0}));
    out.push_back(build({"division_super_4", {{"lambda", "3"}}, {{"quat", 1}}, 0}));
    out.push_back(build({"jordan_Qn", {}, {{"n", 3}}, 7}));
    return out;
}

// random valid document text
std::string random_document(std::mt19937_64& rng)
{
    static const uint32_t chars[] = {0, 2, 3, 5, 7};
    std::uniform_int_distribution<int> pick(0, 4), dimd(1, 5), coin(0, 1), np(0, 2);
    uint32_t p = chars[pick(rng)];
    std::vector<std::string> params;
    for (int i = 0, n = np(rng); i < n; ++i)
        params.push_back(std::string(1, char('a' + i)) + "p");
    const Ring* r = Ring::get(p, params);
    int dim = dimd(rng);
    std::vector<std::string> names;
    std::vector<int> par;
    for (int i = 0; i < dim; ++i) {
        names.push_back(std::string(coin(rng) ? "v" : "w") + std::to_string(i) + (coin(rng) ? "[1]" : ""));
        par.push_back(coin(rng));
    }
    std::string t = "algebra rand " + std::to_string(dim) + "\nchar " + std::to_string(p) + "\n";
    if (!params.empty()) {
        t += "params";
        for (auto& x : params)
            t += " " + x;
        t += "\n";
    }
    t += "basis";
    for (auto& n : names)
        t += " " + n;
    t += "\nodd";
    for (int i = 0; i < dim; ++i)
        if (par[size_t(i)])
            t += " " + names[size_t(i)];
    t += "\n";
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (coin(rng))
                continue;
            std::string rhs;
            for (int k = 0; k < dim; ++k) {
                if (par[size_t(k)] != (par[size_t(i)] ^ par[size_t(j)]) || coin(rng))
                    continue;
                Scalar c = testutil::random_scalar(r, rng, 3, 2);
                if (c.is_zero())
                    continue;
                if (!rhs.empty())
                    rhs += " + ";
                rhs += "(" + c.str() + ")*" + names[size_t(k)];
            }
            if (!rhs.empty())
                t += "mul " + names[size_t(i)] + " " + names[size_t(j)] + " = " + rhs + "\n";
        }
    return t;
}

} // namespace

TEST_CASE("B(1,2) document")
{
    auto A = parse_algebra(B12_DOC);
    auto B = make_b12(Ring::get(3));
    CHECK(A->dim() == 3);
    CHECK(A->basis_names() == B->basis_names());
    CHECK(A->parities() == B->parities());
    CHECK(A->table().size() == B->table().size());
    for (size_t s = 0; s < A->table().size(); ++s) {
        REQUIRE(A->table()[s].size() == B->table()[s].size());
        for (size_t t = 0; t < A->table()[s].size(); ++t) {
            CHECK(A->table()[s][t].k == B->table()[s][t].k);
            CHECK(A->table()[s][t].c == B->table()[s][t].c);
        }
    }
    CHECK((A->basis("x") * A->basis("x")).is_zero());
}

TEST_CASE("document errors carry positions")
{
    try {
        parse_algebra("char 3\nbasis a b\nodd a b\nmul a b = a\n");
        FAIL("expected grading error");
    } catch (const DslError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("(indices 0,1,0)") != std::string::npos);
    }
    try {
        parse_algebra("char 0\nbasis a b a\n");
        FAIL("expected duplicate error");
    } catch (const DslError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 11);
    }
    try {
        parse_algebra("char 0\nbasis a b\nmul a b = 2*c\n");
        FAIL("expected undeclared name");
    } catch (const DslError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 11);
    }
    CHECK_THROWS_AS(parse_algebra("char 4\nbasis a\n"), DslError);
    CHECK_THROWS_AS(parse_algebra("char 0\nbasis a\nfrobnicate a\n"), DslError);
    CHECK_THROWS_AS(parse_algebra("char 0\nbasis a\nmul a a = a\nmul a a = a\n"), DslError);
    CHECK_THROWS_AS(parse_algebra("char 0\nbasis a\nmul a a = (2*a\n"), DslError);
    CHECK_THROWS_AS(parse_algebra("char 0\nbasis a\nmul a a = q*a\n"), DslError);
    CHECK_THROWS_AS(parse_algebra("char 0\nbasis a\nunit 2*a\n"), DslError);
    CHECK_THROWS_AS(parse_algebra("char 0\n"), DslError);
}

TEST_CASE("serializer output")
{
    auto B = make_b42(Ring::get(3));
    auto text = serialize_algebra(*B);
    CHECK(text.find("mul m1 m2 = e11\n") != std::string::npos);
    CHECK(serialize_algebra(*B) == text);
    CHECK(serialize_algebra(*parse_algebra(text)) == text);
    // implied unit products are left out
    auto b12 = serialize_algebra(*make_b12(Ring::get(3)));
    CHECK(b12.find("mul 1 ") == std::string::npos);
    CHECK(b12.find("unit 1\n") != std::string::npos);
    CHECK(b12.find("mul y x = 2*1\n") != std::string::npos);
}

TEST_CASE("round trip over catalog exports")
{
    for (auto& A : catalog_exports()) {
        CAPTURE(A->name());
        auto text = serialize_algebra(*A);
        auto B = parse_algebra(text);
        CHECK(same_structure(*A, *B));
        CHECK(B->name() == A->name());
        CHECK(serialize_algebra(*B) == text);
    }
}

TEST_CASE("round trip over random documents")
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        auto doc = random_document(rng);
        CAPTURE(doc);
        auto A = parse_algebra(doc);
        auto B = parse_algebra(serialize_algebra(*A));
        CHECK(same_structure(*A, *B));
    }
}

TEST_CASE("linear combinations")
{
    auto A = parse_algebra("char 0\nparams s\nbasis a b\nmul a a = a - b\nmul a b = -b + (s + 1)*a\n"
                           "mul b a = -1/2*b + s^2*a\nmul b b = 0\n");
    auto s = Scalar::var(A->ring(), "s");
    CHECK(A->basis("a") * A->basis("a") == A->basis("a") - A->basis("b"));
    CHECK(A->basis("a") * A->basis("b") == A->basis("a").scaled(s + Scalar::constant(A->ring(), 1)) - A->basis("b"));
    CHECK(A->basis("b") * A->basis("a") ==
          A->basis("a").scaled(s * s) - A->basis("b").scaled(Scalar::rational(A->ring(), mpq_class(1, 2))));
    CHECK((A->basis("b") * A->basis("b")).is_zero());
}
