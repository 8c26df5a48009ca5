#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "superalg/ring.hpp"

// Dense exact linear algebra over Q or GF(p). Small matrices only (the
// algebras handled here have dimension below a hundred).
namespace salg::la {

struct QField {
    using T = mpq_class;
    static bool zero(const T& a) { return sgn(a) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const
    {
        if (zero(a))
            throw Error("division by zero");
        return 1 / a;
    }
    T one() const { return 1; }
    T from_int(long v) const { return v; }
    T from_scalar(const Scalar& s) const { return s.rational_value(); }
    Scalar to_scalar(const Ring* r, const T& v) const { return Scalar::rational(r, v); }
};

struct PField {
    using T = uint32_t;
    uint32_t p;
    static bool zero(T a) { return a == 0; }
    T add(T a, T b) const { uint64_t s = uint64_t(a) + b; return T(s >= p ? s - p : s); }
    T sub(T a, T b) const { return a >= b ? a - b : T(uint64_t(a) + p - b); }
    T mul(T a, T b) const { return T(uint64_t(a) * b % p); }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const { return inv_mod(a, p); }
    T one() const { return 1; }
    T from_int(long v) const
    {
        long r = v % long(p);
        return T(r < 0 ? r + long(p) : r);
    }
    T from_scalar(const Scalar& s) const { return s.residue(); }
    Scalar to_scalar(const Ring* r, T v) const { return Scalar::constant(r, long(v)); }
};

// Polynomial coefficients; no inverses beyond constants.
struct ScalarOps {
    using T = Scalar;
    const Ring* r;
    static bool zero(const T& a) { return a.is_zero(); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T one() const { return Scalar::constant(r, 1); }
    T from_int(long v) const { return Scalar::constant(r, v); }
    T from_scalar(const Scalar& s) const { return s; }
    Scalar to_scalar(const Ring*, const T& v) const { return v; }
};

// Run fn(QField) or fn(PField) depending on the characteristic of r; r must
// have no parameters.
template <class Fn>
auto with_field(const Ring* r, Fn&& fn)
{
    if (r->has_params())
        throw Error("operation needs field coefficients, but " + r->describe() +
                    " has parameters; specialize the algebra first");
    if (r->characteristic() == 0)
        return fn(QField{});
    return fn(PField{r->characteristic()});
}

template <class F>
using Vec = std::vector<typename F::T>;

// Incrementally maintained row-echelon basis of a subspace of F^n. Rows are
// kept fully reduced with pivot coefficient 1.
template <class F>
class Echelon {
public:
    Echelon(F f, size_t n) : f_(f), n_(n) {}

    size_t rank() const { return rows_.size(); }
    size_t ambient() const { return n_; }
    const std::vector<Vec<F>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return piv_; }

    // reduce v against the basis in place; true if v became zero
    bool reduce(Vec<F>& v) const
    {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const auto& c = v[piv_[r]];
            if (F::zero(c))
                continue;
            auto factor = c;
            const auto& row = rows_[r];
            for (size_t k = 0; k < n_; ++k)
                if (!F::zero(row[k]))
                    v[k] = f_.sub(v[k], f_.mul(factor, row[k]));
        }
        for (auto& x : v)
            if (!F::zero(x))
                return false;
        return true;
    }

    // add v; returns true if it enlarged the span
    bool insert(Vec<F> v)
    {
        if (reduce(v))
            return false;
        size_t p = 0;
        while (F::zero(v[p]))
            ++p;
        auto iv = f_.inv(v[p]);
        for (auto& x : v)
            x = f_.mul(x, iv);
        for (auto& row : rows_) {
            if (F::zero(row[p]))
                continue;
            auto factor = row[p];
            for (size_t k = 0; k < n_; ++k)
                if (!F::zero(v[k]))
                    row[k] = f_.sub(row[k], f_.mul(factor, v[k]));
        }
        // keep rows ordered by pivot for a canonical result
        size_t pos = 0;
        while (pos < piv_.size() && piv_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        piv_.insert(piv_.begin() + pos, p);
        return true;
    }

    bool contains(Vec<F> v) const { return reduce(v); }

    // basis of {x : row.x = 0 for every row}
    std::vector<Vec<F>> nullspace() const
    {
        std::vector<bool> is_piv(n_, false);
        for (auto p : piv_)
            is_piv[p] = true;
        std::vector<Vec<F>> out;
        for (size_t free = 0; free < n_; ++free) {
            if (is_piv[free])
                continue;
            Vec<F> x(n_, f_.from_int(0));
            x[free] = f_.one();
            for (size_t r = 0; r < rows_.size(); ++r)
                x[piv_[r]] = f_.neg(rows_[r][free]);
            out.push_back(std::move(x));
        }
        return out;
    }

private:
    F f_;
    size_t n_;
    std::vector<Vec<F>> rows_;
    std::vector<size_t> piv_;
};

// Solve A x = b (A given by rows). Returns nullopt when inconsistent; free
// variables are set to zero.
template <class F>
std::optional<Vec<F>> solve(F f, const std::vector<Vec<F>>& A, const Vec<F>& b, size_t n)
{
    std::vector<Vec<F>> m;
    m.reserve(A.size());
    for (size_t i = 0; i < A.size(); ++i) {
        Vec<F> row = A[i];
        row.push_back(b[i]);
        m.push_back(std::move(row));
    }
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && F::zero(m[p][c]))
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        auto iv = f.inv(m[r][c]);
        for (auto& x : m[r])
            x = f.mul(x, iv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || F::zero(m[i][c]))
                continue;
            auto factor = m[i][c];
            for (size_t k = c; k <= n; ++k)
                m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
        }
        piv.push_back(c);
        ++r;
    }
    for (size_t i = r; i < m.size(); ++i)
        if (!F::zero(m[i][n]))
            return std::nullopt;
    Vec<F> x(n, f.from_int(0));
    for (size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = m[i][n];
    return x;
}

template <class F>
size_t rank(F f, const std::vector<Vec<F>>& rows, size_t n)
{
    Echelon<F> e(f, n);
    for (auto& r : rows)
        e.insert(r);
    return e.rank();
}

} // namespace salg::la
