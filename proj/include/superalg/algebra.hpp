#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superalg/ring.hpp"

namespace salg {

struct Entry {
    uint32_t k;
    Scalar c;
};
// e_i e_j = sum over entries c * e_k, sorted by k, no zero coefficients
using Row = std::vector<Entry>;

class SuperAlgebra;
using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

// Raised when a table sends e_i e_j onto a basis element of the wrong parity.
class GradingError : public Error {
public:
    GradingError(const std::string& msg, size_t i, size_t j, size_t k) : Error(msg), i(i), j(j), k(k) {}
    size_t i, j, k;
};

class Element {
public:
    Element() = default;
    explicit Element(const SuperAlgebra& A);
    Element(const SuperAlgebra& A, std::vector<Scalar> coords);
    static Element basis(const SuperAlgebra& A, size_t i);

    const SuperAlgebra* algebra() const { return alg_; }
    size_t dim() const { return c_.size(); }
    const Scalar& operator[](size_t i) const { return c_[i]; }
    Scalar& operator[](size_t i) { return c_[i]; }
    const std::vector<Scalar>& coords() const { return c_; }

    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element scaled(const Scalar& s) const;
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element even() const;
    Element odd() const;
    // nonzero coordinates only on basis elements of one parity (zero counts as even)
    std::optional<int> parity() const;

    std::string str() const;

private:
    const SuperAlgebra* alg_ = nullptr;
    std::vector<Scalar> c_;
};

class SuperAlgebra {
public:
    // Validates names, parities, coefficient ring, grading closure and the
    // unit axiom; throws Error / GradingError.
    static AlgebraPtr make(std::string name, const Ring* ring, std::vector<std::string> basis,
                           std::vector<int> parity, std::vector<Row> table,
                           std::optional<std::vector<Scalar>> unit = std::nullopt,
                           std::vector<std::string> notes = {});

    const std::string& name() const { return name_; }
    const Ring* ring() const { return ring_; }
    size_t dim() const { return names_.size(); }
    int parity(size_t i) const { return parity_[i]; }
    const std::vector<int>& parities() const { return parity_; }
    const std::string& basis_name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& basis_names() const { return names_; }
    int index_of(const std::string& name) const;
    const Row& product(size_t i, size_t j) const { return table_[i * dim() + j]; }
    const std::vector<Row>& table() const { return table_; }
    bool has_unit() const { return unit_.has_value(); }
    Element unit() const;
    const std::optional<std::vector<Scalar>>& unit_coords() const { return unit_; }
    const std::vector<std::string>& notes() const { return notes_; }

    Element basis(size_t i) const { return Element::basis(*this, i); }
    Element basis(const std::string& name) const;
    Element zero() const { return Element(*this); }

    // copy with a different name and extra notes
    AlgebraPtr renamed(std::string name, std::vector<std::string> extra_notes = {}) const;

private:
    SuperAlgebra() = default;
    std::string name_;
    const Ring* ring_ = nullptr;
    std::vector<std::string> names_;
    std::vector<int> parity_;
    std::vector<Row> table_;
    std::optional<std::vector<Scalar>> unit_;
    std::vector<std::string> notes_;
};

// Accumulates structure constants; zero sums vanish.
class TableBuilder {
public:
    TableBuilder(const Ring* r, size_t dim) : ring_(r), dim_(dim), t_(dim * dim) {}
    void add(size_t i, size_t j, size_t k, const Scalar& c);
    void add(size_t i, size_t j, size_t k, long c) { add(i, j, k, Scalar::constant(ring_, c)); }
    void add_element(size_t i, size_t j, const Element& v);
    std::vector<Row> build() const;
    size_t dim() const { return dim_; }

private:
    const Ring* ring_;
    size_t dim_;
    std::vector<std::vector<std::pair<uint32_t, Scalar>>> t_;
};

// First (i,j,k) violating grading closure, if any.
std::optional<std::array<size_t, 3>> grading_violation(const SuperAlgebra& A);

Element multiply(const Element& x, const Element& y);
Element associator(const Element& x, const Element& y, const Element& z);
Element commutator_plain(const Element& x, const Element& y);
Element supercommutator(const Element& x, const Element& y);
Element circ_plain(const Element& x, const Element& y);

AlgebraPtr plus_algebra(const SuperAlgebra& A);

struct CenterBasis {
    std::vector<Element> even_part;
    std::vector<Element> odd_part;
};
// Center: commutes and associates with everything, using the plain commutator; `super` switches the
// commutator constraint to the Koszul-signed one.
CenterBasis center(const SuperAlgebra& A, bool super = false);
bool in_center(const Element& x, bool super = false);

std::vector<Element> centralizer(const SuperAlgebra& A, const Element& u);
std::vector<Element> anticentralizer(const SuperAlgebra& A, const Element& u);

// A tensor k[u] with u^2 = alpha; basis e_i then e_i u (named NAMEu).
AlgebraPtr tensor_with_quadratic(const SuperAlgebra& A, const Scalar& alpha, int u_parity);

// (n+m)x(n+m) matrices over A; diagonal blocks even, parity also shifted by A's grading.
AlgebraPtr checkerboard_matrix_super(const SuperAlgebra& A, size_t n, size_t m);

// One-dimensional algebra k with unit.
AlgebraPtr ground_field(const Ring* r);

struct IdealReport {
    Element generator;
    std::vector<Element> closure_basis;
    bool is_proper = false;
};
IdealReport ideal_closure(const SuperAlgebra& A, const Element& v);

enum class Verdict { simple, ideal_found, inconclusive };
std::string to_string(Verdict v);

struct ProbeResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<IdealReport> ideal;
    bool certified = false;          // simple verdict backed by an irreducibility certificate
    std::vector<uint32_t> primes;    // primes used for modular work
    std::string note;
};
ProbeResult simplicity_probe(const SuperAlgebra& A, int trials, uint64_t seed);

// Subalgebra spanned by the given elements (constant coordinates). Throws if
// the span is not closed or the vectors are dependent.
AlgebraPtr subalgebra_from_embedding(const SuperAlgebra& A, const std::vector<Element>& vecs,
                                     std::vector<std::string> names, std::vector<int> parity,
                                     std::string name, std::optional<Element> unit = std::nullopt);

// Coordinates of x in the span of `basis` (constant coefficients on pivots);
// nullopt if x is outside the span.
std::optional<std::vector<Scalar>> coordinates_in_span(const std::vector<Element>& basis, const Element& x);

// Move every structure constant to a ring of the same characteristic that
// contains all parameters in use.
AlgebraPtr embed_algebra(const SuperAlgebra& A, const Ring* target);
// Reduce every structure constant at the specialization (result over GF(p)).
AlgebraPtr specialize_algebra(const SuperAlgebra& A, const Specialization& s);
// Substitute parameters in every structure constant.
AlgebraPtr substitute_algebra(const SuperAlgebra& A, const std::map<std::string, Scalar>& bindings);

} // namespace salg
