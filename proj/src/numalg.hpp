#pragma once

// Structure constants converted to plain field values, for the linear-algebra
// heavy operations (centers, closures, the simplicity probe).

#include "superalg/algebra.hpp"
#include "superalg/linalg.hpp"

namespace salg::detail {

template <class F>
struct NumAlg {
    using T = typename F::T;
    F f;
    size_t dim = 0;
    std::vector<int> par;
    std::vector<std::vector<std::pair<uint32_t, T>>> tab;

    NumAlg(F f_, const SuperAlgebra& A) : f(f_), dim(A.dim()), par(A.parities()), tab(A.dim() * A.dim())
    {
        for (size_t i = 0; i < tab.size(); ++i)
            for (auto& e : A.table()[i])
                tab[i].push_back({e.k, f.from_scalar(e.c)});
    }

    la::Vec<F> zero() const { return la::Vec<F>(dim, f.from_int(0)); }
    la::Vec<F> unitvec(size_t i) const
    {
        auto v = zero();
        v[i] = f.one();
        return v;
    }

    la::Vec<F> mul(const la::Vec<F>& x, const la::Vec<F>& y) const
    {
        auto out = zero();
        for (size_t i = 0; i < dim; ++i) {
            if (F::zero(x[i]))
                continue;
            for (size_t j = 0; j < dim; ++j) {
                if (F::zero(y[j]))
                    continue;
                auto xy = f.mul(x[i], y[j]);
                for (auto& [k, c] : tab[i * dim + j])
                    out[k] = f.add(out[k], f.mul(xy, c));
            }
        }
        return out;
    }

    // e_i * y
    la::Vec<F> lmul(size_t i, const la::Vec<F>& y) const
    {
        auto out = zero();
        for (size_t j = 0; j < dim; ++j) {
            if (F::zero(y[j]))
                continue;
            for (auto& [k, c] : tab[i * dim + j])
                out[k] = f.add(out[k], f.mul(y[j], c));
        }
        return out;
    }

    // x * e_j
    la::Vec<F> rmul(const la::Vec<F>& x, size_t j) const
    {
        auto out = zero();
        for (size_t i = 0; i < dim; ++i) {
            if (F::zero(x[i]))
                continue;
            for (auto& [k, c] : tab[i * dim + j])
                out[k] = f.add(out[k], f.mul(x[i], c));
        }
        return out;
    }

    la::Vec<F> axpy(const la::Vec<F>& x, const T& s, const la::Vec<F>& y) const
    {
        auto out = x;
        for (size_t k = 0; k < dim; ++k)
            if (!F::zero(y[k]))
                out[k] = f.add(out[k], f.mul(s, y[k]));
        return out;
    }

    la::Vec<F> from_element(const Element& x) const
    {
        la::Vec<F> v;
        v.reserve(dim);
        for (auto& c : x.coords())
            v.push_back(f.from_scalar(c));
        return v;
    }

    Element to_element(const SuperAlgebra& A, const la::Vec<F>& v) const
    {
        std::vector<Scalar> c;
        c.reserve(dim);
        for (auto& x : v)
            c.push_back(f.to_scalar(A.ring(), x));
        return Element(A, std::move(c));
    }
};

} // namespace salg::detail
