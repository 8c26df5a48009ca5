#pragma once

#include <random>

#include "superalg/algebra.hpp"
#include "superalg/ring.hpp"

namespace testutil {

inline salg::Scalar c(const salg::Ring* r, long v) { return salg::Scalar::constant(r, v); }

// random polynomial with up to `terms` terms and small exponents
inline salg::Scalar random_scalar(const salg::Ring* r, std::mt19937_64& rng, int terms = 4, int maxexp = 3)
{
    std::uniform_int_distribution<int> nt(0, terms), ex(0, maxexp), co(-9, 9);
    salg::Scalar s(r);
    int n = nt(rng);
    for (int t = 0; t < n; ++t) {
        salg::Scalar m = salg::Scalar::constant(r, co(rng));
        for (auto& p : r->params())
            m = m * salg::Scalar::var(r, p).pow(static_cast<unsigned>(ex(rng)));
        s = s + m;
    }
    return s;
}

// Exterior algebra on two odd generators.
inline salg::AlgebraPtr grassmann2(const salg::Ring* r)
{
    salg::TableBuilder tb(r, 4); // 1, x1, x2, x1x2
    for (size_t i = 0; i < 4; ++i) {
        tb.add(0, i, i, 1);
        if (i)
            tb.add(i, 0, i, 1);
    }
    tb.add(1, 2, 3, 1);
    tb.add(2, 1, 3, -1);
    return salg::SuperAlgebra::make("Lambda2", r, {"1", "x1", "x2", "x12"}, {0, 1, 1, 0}, tb.build(),
                                    std::vector<salg::Scalar>{c(r, 1), c(r, 0), c(r, 0), c(r, 0)});
}

// same algebra in a random homogeneous basis
inline salg::AlgebraPtr random_rebase(const salg::SuperAlgebra& A, std::mt19937_64& rng)
{
    const salg::Ring* r = A.ring();
    std::uniform_int_distribution<long> co(-3, 3);
    size_t n = A.dim();
    std::vector<salg::Element> vecs;
    std::vector<std::string> names;
    std::vector<int> par;
    for (int p = 0; p < 2; ++p) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if (A.parity(i) == p)
                idx.push_back(i);
        std::vector<salg::Element> block;
        while (block.size() < idx.size()) {
            salg::Element v(A);
            for (size_t i : idx)
                v[i] = c(r, co(rng));
            // keep v if it is independent of the earlier picks
            if (!v.is_zero() && !salg::coordinates_in_span(block, v))
                block.push_back(v);
        }
        for (auto& v : block) {
            names.push_back("f" + std::to_string(vecs.size()));
            par.push_back(p);
            vecs.push_back(v);
        }
    }
    return salg::subalgebra_from_embedding(A, vecs, names, par, A.name() + "'", A.unit());
}

} // namespace testutil
