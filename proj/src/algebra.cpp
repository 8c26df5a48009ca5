#include "superalg/algebra.hpp"

#include <algorithm>
#include <set>

namespace salg {

namespace {

void same_algebra(const Element& x, const Element& y)
{
    if (!x.algebra() || x.algebra() != y.algebra())
        throw Error("elements belong to different algebras");
}

std::string coef_name(const Scalar& c, const std::string& name)
{
    if (c.is_one())
        return name;
    std::string s = c.str();
    if (c.nterms() > 1)
        s = "(" + s + ")";
    return s + "*" + name;
}

} // namespace

// ---------------------------------------------------------------- elements

Element::Element(const SuperAlgebra& A) : alg_(&A), c_(A.dim(), Scalar(A.ring())) {}

Element::Element(const SuperAlgebra& A, std::vector<Scalar> coords) : alg_(&A), c_(std::move(coords))
{
    if (c_.size() != A.dim())
        throw Error("coordinate vector has length " + std::to_string(c_.size()) + ", algebra " + A.name() +
                    " has dimension " + std::to_string(A.dim()));
    for (auto& c : c_) {
        if (!c.ring())
            c = Scalar(A.ring());
        else if (c.ring() != A.ring())
            throw Error("coordinate in " + c.ring()->describe() + " for algebra over " + A.ring()->describe());
    }
}

Element Element::basis(const SuperAlgebra& A, size_t i)
{
    if (i >= A.dim())
        throw Error("basis index out of range");
    Element e(A);
    e.c_[i] = Scalar::constant(A.ring(), 1);
    return e;
}

bool Element::is_zero() const
{
    for (auto& c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

Element Element::operator+(const Element& o) const
{
    same_algebra(*this, o);
    Element r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero())
            r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Element Element::operator-(const Element& o) const
{
    same_algebra(*this, o);
    Element r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero())
            r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Element Element::operator-() const
{
    Element r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Element Element::operator*(const Element& o) const { return multiply(*this, o); }

Element Element::scaled(const Scalar& s) const
{
    Element r(*this);
    for (auto& c : r.c_)
        if (!c.is_zero())
            c = c * s;
    return r;
}

bool Element::operator==(const Element& o) const
{
    if (alg_ != o.alg_)
        return false;
    return c_ == o.c_;
}

Element Element::even() const
{
    Element r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        if (alg_->parity(i))
            r.c_[i] = Scalar(alg_->ring());
    return r;
}

Element Element::odd() const
{
    Element r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        if (!alg_->parity(i))
            r.c_[i] = Scalar(alg_->ring());
    return r;
}

std::optional<int> Element::parity() const
{
    bool ev = false, od = false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            (alg_->parity(i) ? od : ev) = true;
    if (ev && od)
        return std::nullopt;
    return od ? 1 : 0;
}

std::string Element::str() const
{
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += coef_name(c_[i], alg_->basis_name(i));
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- algebras

AlgebraPtr SuperAlgebra::make(std::string name, const Ring* ring, std::vector<std::string> basis,
                              std::vector<int> parity, std::vector<Row> table,
                              std::optional<std::vector<Scalar>> unit, std::vector<std::string> notes)
{
    size_t n = basis.size();
    if (n == 0)
        throw Error("algebra " + name + " has an empty basis");
    if (parity.size() != n)
        throw Error("parity list length differs from basis size");
    std::set<std::string> seen;
    for (auto& b : basis) {
        if (b.empty())
            throw Error("empty basis name");
        if (!seen.insert(b).second)
            throw Error("duplicate basis name '" + b + "'");
    }
    for (int p : parity)
        if (p != 0 && p != 1)
            throw Error("parity must be 0 or 1");
    if (table.size() != n * n)
        throw Error("multiplication table has wrong size");
    for (size_t ij = 0; ij < table.size(); ++ij) {
        auto& row = table[ij];
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.k < b.k; });
        Row clean;
        for (auto& e : row) {
            if (e.k >= n)
                throw Error("structure constant refers to basis index out of range");
            if (e.c.ring() != ring)
                throw Error("structure constant in " + (e.c.ring() ? e.c.ring()->describe() : std::string("no ring")) +
                            " for algebra over " + ring->describe());
            if (!clean.empty() && clean.back().k == e.k)
                clean.back().c += e.c;
            else
                clean.push_back(e);
        }
        std::erase_if(clean, [](const Entry& e) { return e.c.is_zero(); });
        row = std::move(clean);
        size_t i = ij / n, j = ij % n;
        for (auto& e : row)
            if (parity[e.k] != (parity[i] ^ parity[j]))
                throw GradingError("grading closure violated: " + basis[i] + "*" + basis[j] + " has a component on " +
                                       basis[e.k] + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                       ", k=" + std::to_string(e.k) + ")",
                                   i, j, e.k);
    }
    auto A = std::shared_ptr<SuperAlgebra>(new SuperAlgebra());
    A->name_ = std::move(name);
    A->ring_ = ring;
    A->names_ = std::move(basis);
    A->parity_ = std::move(parity);
    A->table_ = std::move(table);
    A->notes_ = std::move(notes);
    if (unit) {
        Element u(*A, *unit);
        if (u.parity() != 0)
            throw Error("unit of " + A->name_ + " is not even");
        for (size_t i = 0; i < n; ++i) {
            auto e = Element::basis(*A, i);
            if (multiply(u, e) != e || multiply(e, u) != e)
                throw Error("declared unit of " + A->name_ + " fails the unit axiom on " + A->names_[i]);
        }
        A->unit_ = u.coords();
    }
    return A;
}

int SuperAlgebra::index_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : int(it - names_.begin());
}

Element SuperAlgebra::basis(const std::string& name) const
{
    int i = index_of(name);
    if (i < 0)
        throw Error("no basis element '" + name + "' in " + name_);
    return Element::basis(*this, size_t(i));
}

Element SuperAlgebra::unit() const
{
    if (!unit_)
        throw Error("algebra " + name_ + " has no unit");
    return Element(*this, *unit_);
}

AlgebraPtr SuperAlgebra::renamed(std::string name, std::vector<std::string> extra_notes) const
{
    auto notes = notes_;
    notes.insert(notes.end(), extra_notes.begin(), extra_notes.end());
    return make(std::move(name), ring_, names_, parity_, table_, unit_, std::move(notes));
}

void TableBuilder::add(size_t i, size_t j, size_t k, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto& cell = t_[i * dim_ + j];
    for (auto& [kk, v] : cell)
        if (kk == k) {
            v = v + c;
            return;
        }
    cell.push_back({uint32_t(k), c});
}

void TableBuilder::add_element(size_t i, size_t j, const Element& v)
{
    for (size_t k = 0; k < v.dim(); ++k)
        add(i, j, k, v[k]);
}

std::vector<Row> TableBuilder::build() const
{
    std::vector<Row> out(t_.size());
    for (size_t i = 0; i < t_.size(); ++i)
        for (auto& [k, c] : t_[i])
            if (!c.is_zero())
                out[i].push_back({k, c});
    return out;
}

std::optional<std::array<size_t, 3>> grading_violation(const SuperAlgebra& A)
{
    size_t n = A.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (auto& e : A.product(i, j))
                if (!e.c.is_zero() && A.parity(e.k) != (A.parity(i) ^ A.parity(j)))
                    return std::array<size_t, 3>{i, j, e.k};
    return std::nullopt;
}

// ---------------------------------------------------------------- products

Element multiply(const Element& x, const Element& y)
{
    same_algebra(x, y);
    const SuperAlgebra& A = *x.algebra();
    size_t n = A.dim();
    Element out(A);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            const Row& row = A.product(i, j);
            if (row.empty())
                continue;
            Scalar xy = x[i] * y[j];
            for (auto& e : row)
                out[e.k] += e.c.is_one() ? xy : xy * e.c;
        }
    }
    return out;
}

Element associator(const Element& x, const Element& y, const Element& z)
{
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

Element commutator_plain(const Element& x, const Element& y) { return multiply(x, y) - multiply(y, x); }

Element supercommutator(const Element& x, const Element& y)
{
    same_algebra(x, y);
    Element parts_x[2] = {x.even(), x.odd()}, parts_y[2] = {y.even(), y.odd()};
    Element out(*x.algebra());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            if (parts_x[a].is_zero() || parts_y[b].is_zero())
                continue;
            Element yx = multiply(parts_y[b], parts_x[a]);
            out += multiply(parts_x[a], parts_y[b]);
            if (a && b)
                out += yx;
            else
                out -= yx;
        }
    return out;
}

Element circ_plain(const Element& x, const Element& y) { return multiply(x, y) + multiply(y, x); }

// ---------------------------------------------------------------- constructions

AlgebraPtr plus_algebra(const SuperAlgebra& A)
{
    const Ring* r = A.ring();
    if (r->characteristic() == 2)
        throw Error("plus algebra needs 1/2, unavailable in characteristic 2");
    Scalar half = divide_exact(Scalar::constant(r, 1), Scalar::constant(r, 2));
    size_t n = A.dim();
    TableBuilder tb(r, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar s = (A.parity(i) && A.parity(j)) ? -half : half;
            for (auto& e : A.product(i, j))
                tb.add(i, j, e.k, e.c * half);
            for (auto& e : A.product(j, i))
                tb.add(i, j, e.k, e.c * s);
        }
    return SuperAlgebra::make(A.name() + "+", r, A.basis_names(), A.parities(), tb.build(), A.unit_coords(),
                              A.notes());
}

AlgebraPtr tensor_with_quadratic(const SuperAlgebra& A, const Scalar& alpha, int u_parity)
{
    if (alpha.ring() != A.ring())
        throw Error("alpha must lie in the coefficient ring of " + A.name());
    if (alpha.is_zero())
        throw Error("tensor_with_quadratic needs alpha != 0");
    if (u_parity != 0 && u_parity != 1)
        throw Error("u parity must be 0 or 1");
    size_t n = A.dim();
    std::vector<std::string> names = A.basis_names();
    std::vector<int> par = A.parities();
    for (size_t i = 0; i < n; ++i) {
        names.push_back(A.basis_name(i) + "u");
        par.push_back(A.parity(i) ^ u_parity);
    }
    TableBuilder tb(A.ring(), 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (auto& e : A.product(i, j)) {
                tb.add(i, j, e.k, e.c);
                tb.add(i, j + n, e.k + n, e.c);
                tb.add(i + n, j, e.k + n, e.c);
                tb.add(i + n, j + n, e.k, e.c * alpha);
            }
    std::optional<std::vector<Scalar>> unit;
    if (A.has_unit()) {
        unit = *A.unit_coords();
        unit->resize(2 * n, Scalar(A.ring()));
    }
    return SuperAlgebra::make(A.name() + "[u]", A.ring(), names, par, tb.build(), unit, A.notes());
}

AlgebraPtr checkerboard_matrix_super(const SuperAlgebra& A, size_t n, size_t m)
{
    if (n + m == 0)
        throw Error("checkerboard matrix superalgebra needs n + m > 0");
    size_t N = n + m, d = A.dim();
    auto blk = [&](size_t i) { return i < n ? 0 : 1; };
    auto idx = [&](size_t i, size_t j, size_t b) { return (i * N + j) * d + b; };
    auto ij = [&](size_t i, size_t j) {
        return N > 9 ? std::to_string(i + 1) + "_" + std::to_string(j + 1) : std::to_string(i + 1) + std::to_string(j + 1);
    };
    std::vector<std::string> names;
    std::vector<int> par;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            for (size_t b = 0; b < d; ++b) {
                names.push_back(d == 1 ? "e" + ij(i, j) : A.basis_name(b) + "[" + ij(i, j) + "]");
                par.push_back((blk(i) + blk(j) + A.parity(b)) % 2);
            }
    TableBuilder tb(A.ring(), N * N * d);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            for (size_t l = 0; l < N; ++l)
                for (size_t a = 0; a < d; ++a)
                    for (size_t b = 0; b < d; ++b)
                        for (auto& e : A.product(a, b))
                            tb.add(idx(i, j, a), idx(j, l, b), idx(i, l, e.k), e.c);
    std::optional<std::vector<Scalar>> unit;
    if (A.has_unit()) {
        unit = std::vector<Scalar>(N * N * d, Scalar(A.ring()));
        for (size_t i = 0; i < N; ++i)
            for (size_t b = 0; b < d; ++b)
                (*unit)[idx(i, i, b)] = (*A.unit_coords())[b];
    }
    std::string nm = "M_{" + std::to_string(n) + "+" + std::to_string(m) + "}(" + A.name() + ")";
    return SuperAlgebra::make(nm, A.ring(), names, par, tb.build(), unit, A.notes());
}

AlgebraPtr ground_field(const Ring* r)
{
    TableBuilder tb(r, 1);
    tb.add(0, 0, 0, 1);
    return SuperAlgebra::make("k", r, {"1"}, {0}, tb.build(), std::vector<Scalar>{Scalar::constant(r, 1)});
}

// ---------------------------------------------------------------- scalar maps

namespace {

template <class Fn>
AlgebraPtr map_scalars(const SuperAlgebra& A, const Ring* target, Fn fn)
{
    std::vector<Row> t = A.table();
    for (auto& row : t)
        for (auto& e : row)
            e.c = fn(e.c);
    std::optional<std::vector<Scalar>> unit;
    if (A.has_unit()) {
        unit = *A.unit_coords();
        for (auto& c : *unit)
            c = fn(c);
    }
    return SuperAlgebra::make(A.name(), target, A.basis_names(), A.parities(), std::move(t), unit, A.notes());
}

} // namespace

AlgebraPtr embed_algebra(const SuperAlgebra& A, const Ring* target)
{
    return map_scalars(A, target, [&](const Scalar& c) { return c.embed(target); });
}

AlgebraPtr specialize_algebra(const SuperAlgebra& A, const Specialization& s)
{
    const Ring* target = Ring::get(s.p);
    return map_scalars(A, target, [&](const Scalar& c) { return c.specialize(s); });
}

AlgebraPtr substitute_algebra(const SuperAlgebra& A, const std::map<std::string, Scalar>& bindings)
{
    const Ring* target = A.ring();
    if (!bindings.empty())
        target = bindings.begin()->second.ring();
    return map_scalars(A, target, [&](const Scalar& c) {
        if (c.ring() == target && bindings.empty())
            return c;
        return substitute(c, bindings);
    });
}

} // namespace salg
