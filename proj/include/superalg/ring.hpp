#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace salg {

// Every failure surfaced by the library is one of these; the message is meant
// for a human and is copied verbatim into CLI reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(uint64_t n);

// Characteristic plus an ordered list of indeterminates. Instances are interned,
// so two rings are the same ring iff their pointers are equal.
class Ring {
public:
    static const Ring* get(uint32_t characteristic, std::vector<std::string> params = {});

    uint32_t characteristic() const { return char_; }
    const std::vector<std::string>& params() const { return params_; }
    size_t nparams() const { return params_.size(); }
    int index_of(std::string_view name) const;
    bool has_params() const { return !params_.empty(); }
    // same characteristic, no indeterminates
    const Ring* base() const { return get(char_); }
    std::string describe() const;

private:
    Ring(uint32_t c, std::vector<std::string> p);
    uint32_t char_;
    std::vector<std::string> params_;
    std::map<std::string, int, std::less<>> index_;
};

using Exps = boost::container::small_vector<uint16_t, 12>;

template <class C>
struct Term {
    Exps e;
    uint32_t deg = 0;
    C c;
};
using QTerm = Term<mpq_class>;
using PTerm = Term<uint32_t>;

// Parameter values drawn for a modular specialization; shared between scalars so
// a whole algebra can be specialized consistently.
struct Specialization {
    uint32_t p = 0;
    std::vector<std::string> names;
    std::vector<uint32_t> values;
};

Specialization make_specialization(const Ring* ring, uint64_t seed, uint32_t p,
                                   const std::vector<std::string>& nonzero = {},
                                   const std::vector<std::string>& distinct = {});

// Sparse polynomial in the ring's parameters, terms kept in descending
// graded-lex order with no zero coefficients.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(const Ring* r) : ring_(r) {}

    static Scalar constant(const Ring* r, long v);
    static Scalar rational(const Ring* r, const mpq_class& v);
    static Scalar var(const Ring* r, std::string_view name);
    static Scalar parse(const Ring* r, std::string_view text);

    const Ring* ring() const { return ring_; }
    bool is_zero() const { return q_.empty() && p_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    size_t nterms() const { return ring_ && ring_->characteristic() ? p_.size() : q_.size(); }
    uint32_t degree() const;

    // constant value; throws when the scalar has a non-constant term
    mpq_class rational_value() const;
    uint32_t residue() const;

    const std::vector<QTerm>& qterms() const { return q_; }
    const std::vector<PTerm>& pterms() const { return p_; }

    Scalar operator+(const Scalar& b) const;
    Scalar operator-(const Scalar& b) const;
    Scalar operator*(const Scalar& b) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    Scalar pow(unsigned k) const;
    std::string str() const;

    // evaluation at the values of a specialization, result in GF(spec.p)
    uint32_t evaluate(const Specialization& s) const;
    // same, returned as a constant of GF(spec.p)
    Scalar specialize(const Specialization& s) const;
    // move into another ring of the same characteristic whose parameter list
    // contains all parameters used here
    Scalar embed(const Ring* target) const;

    static Scalar from_qterms(const Ring* r, std::vector<QTerm> t);
    static Scalar from_pterms(const Ring* r, std::vector<PTerm> t);

private:
    const Ring* ring_ = nullptr;
    std::vector<QTerm> q_;
    std::vector<PTerm> p_;
    friend struct ScalarImpl;
};

Scalar divide_exact(const Scalar& a, const Scalar& b);
Scalar substitute(const Scalar& a, const std::map<std::string, Scalar>& bindings);
uint32_t random_specialize(const Scalar& a, uint64_t seed, uint32_t p,
                           const std::vector<std::string>& nonzero = {},
                           const std::vector<std::string>& distinct = {});

// Names of parameters that occur with nonzero exponent.
std::vector<std::string> support_vars(const Scalar& a);

// modular helpers
uint32_t inv_mod(uint32_t a, uint32_t p);
uint32_t reduce_rational(const mpq_class& q, uint32_t p);

} // namespace salg
