#include "superalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

namespace salg {

bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

uint32_t inv_mod(uint32_t a, uint32_t p)
{
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw Error("element " + std::to_string(a) + " is not invertible modulo " + std::to_string(p));
    return static_cast<uint32_t>(t < 0 ? t + p : t);
}

uint32_t reduce_rational(const mpq_class& q, uint32_t p)
{
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (num < 0)
        num += p;
    if (den == 0)
        throw Error("denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p));
    uint64_t n = num.get_ui(), d = den.get_ui();
    return static_cast<uint32_t>(n * inv_mod(static_cast<uint32_t>(d), p) % p);
}

// ---------------------------------------------------------------- rings

Ring::Ring(uint32_t c, std::vector<std::string> p) : char_(c), params_(std::move(p))
{
    for (size_t i = 0; i < params_.size(); ++i)
        index_.emplace(params_[i], static_cast<int>(i));
}

const Ring* Ring::get(uint32_t characteristic, std::vector<std::string> params)
{
    if (characteristic != 0 && !is_prime(characteristic))
        throw Error("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    if (characteristic > (1u << 31))
        throw Error("characteristic too large");
    for (size_t i = 0; i < params.size(); ++i) {
        if (params[i].empty())
            throw Error("empty parameter name");
        for (size_t j = 0; j < i; ++j)
            if (params[i] == params[j])
                throw Error("duplicate parameter name '" + params[i] + "'");
    }
    static std::mutex mu;
    static std::map<std::pair<uint32_t, std::vector<std::string>>, std::unique_ptr<Ring>> pool;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(characteristic, params);
    auto it = pool.find(key);
    if (it == pool.end())
        it = pool.emplace(key, std::unique_ptr<Ring>(new Ring(characteristic, std::move(params)))).first;
    return it->second.get();
}

int Ring::index_of(std::string_view name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::string Ring::describe() const
{
    std::string s = char_ == 0 ? "Q" : "GF(" + std::to_string(char_) + ")";
    if (!params_.empty()) {
        s += "[";
        for (size_t i = 0; i < params_.size(); ++i)
            s += (i ? "," : "") + params_[i];
        s += "]";
    }
    return s;
}

// ---------------------------------------------------------------- coefficient fields

namespace {

struct QF {
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
    T from(long v) const { return T(v); }
};

struct PF {
    using T = uint32_t;
    uint32_t p;
    static bool zero(T a) { return a == 0; }
    T add(T a, T b) const { uint64_t s = uint64_t(a) + b; return T(s >= p ? s - p : s); }
    T sub(T a, T b) const { return a >= b ? a - b : T(uint64_t(a) + p - b); }
    T mul(T a, T b) const { return T(uint64_t(a) * b % p); }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const
    {
        if (a == 0)
            throw Error(p == 2 ? "division by zero (2 = 0 in characteristic 2)" : "division by zero");
        return inv_mod(a, p);
    }
    T from(long v) const
    {
        long r = v % long(p);
        return T(r < 0 ? r + long(p) : r);
    }
};

// negative: a comes first in the stored (descending) order
template <class C>
int cmp(const Term<C>& a, const Term<C>& b)
{
    if (a.deg != b.deg)
        return a.deg > b.deg ? -1 : 1;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i])
            return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

template <class F>
std::vector<Term<typename F::T>> addv(const F& f, const std::vector<Term<typename F::T>>& A,
                                      const std::vector<Term<typename F::T>>& B, bool subtract)
{
    std::vector<Term<typename F::T>> out;
    out.reserve(A.size() + B.size());
    size_t i = 0, j = 0;
    while (i < A.size() || j < B.size()) {
        int c = i == A.size() ? 1 : j == B.size() ? -1 : cmp(A[i], B[j]);
        if (c < 0) {
            out.push_back(A[i++]);
        } else if (c > 0) {
            out.push_back(B[j]);
            if (subtract)
                out.back().c = f.neg(out.back().c);
            ++j;
        } else {
            auto v = subtract ? f.sub(A[i].c, B[j].c) : f.add(A[i].c, B[j].c);
            if (!F::zero(v))
                out.push_back({A[i].e, A[i].deg, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
std::vector<Term<typename F::T>> mulv(const F& f, const std::vector<Term<typename F::T>>& A,
                                      const std::vector<Term<typename F::T>>& B)
{
    using TT = Term<typename F::T>;
    if (A.empty() || B.empty())
        return {};
    if (A.size() == 1 && A[0].deg == 0) {
        std::vector<TT> out;
        out.reserve(B.size());
        for (auto& t : B) {
            auto v = f.mul(A[0].c, t.c);
            if (!F::zero(v))
                out.push_back({t.e, t.deg, std::move(v)});
        }
        return out;
    }
    if (B.size() == 1 && B[0].deg == 0)
        return mulv(f, B, A);
    std::vector<TT> prod;
    prod.reserve(A.size() * B.size());
    for (auto& a : A)
        for (auto& b : B) {
            TT t;
            t.e = a.e;
            for (size_t k = 0; k < t.e.size(); ++k)
                t.e[k] = static_cast<uint16_t>(t.e[k] + b.e[k]);
            t.deg = a.deg + b.deg;
            t.c = f.mul(a.c, b.c);
            prod.push_back(std::move(t));
        }
    std::sort(prod.begin(), prod.end(), [](const TT& x, const TT& y) { return cmp(x, y) < 0; });
    std::vector<TT> out;
    for (auto& t : prod) {
        if (!out.empty() && cmp(out.back(), t) == 0)
            out.back().c = f.add(out.back().c, t.c);
        else {
            if (!out.empty() && F::zero(out.back().c))
                out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && F::zero(out.back().c))
        out.pop_back();
    return out;
}

} // namespace

struct ScalarImpl {
    static std::vector<QTerm>& v(Scalar& s, QF) { return s.q_; }
    static std::vector<PTerm>& v(Scalar& s, PF) { return s.p_; }
    static const std::vector<QTerm>& v(const Scalar& s, QF) { return s.q_; }
    static const std::vector<PTerm>& v(const Scalar& s, PF) { return s.p_; }

    // run fn with the coefficient field matching the ring
    template <class Fn>
    static auto with_field(const Ring* r, Fn&& fn)
    {
        if (r->characteristic() == 0)
            return fn(QF{});
        return fn(PF{r->characteristic()});
    }
};

namespace {

void same_ring(const Scalar& a, const Scalar& b)
{
    if (!a.ring() || !b.ring())
        throw Error("scalar without a ring");
    if (a.ring() != b.ring())
        throw Error("ring mismatch: " + a.ring()->describe() + " vs " + b.ring()->describe());
}

template <class C>
Term<C> const_term(const Ring* r, C c)
{
    Term<C> t;
    t.e.assign(r->nparams(), 0);
    t.c = std::move(c);
    return t;
}

} // namespace

Scalar Scalar::constant(const Ring* r, long v)
{
    Scalar s(r);
    ScalarImpl::with_field(r, [&](auto f) {
        auto c = f.from(v);
        if (!decltype(f)::zero(c))
            ScalarImpl::v(s, f).push_back(const_term(r, c));
        return 0;
    });
    return s;
}

Scalar Scalar::rational(const Ring* r, const mpq_class& v)
{
    Scalar s(r);
    if (r->characteristic() == 0) {
        if (sgn(v) != 0)
            s.q_.push_back(const_term(r, mpq_class(v)));
    } else {
        uint32_t c = reduce_rational(v, r->characteristic());
        if (c)
            s.p_.push_back(const_term(r, c));
    }
    return s;
}

Scalar Scalar::var(const Ring* r, std::string_view name)
{
    int i = r->index_of(name);
    if (i < 0)
        throw Error("unknown parameter '" + std::string(name) + "' in " + r->describe());
    Scalar s = constant(r, 1);
    ScalarImpl::with_field(r, [&](auto f) {
        auto& t = ScalarImpl::v(s, f)[0];
        t.e[i] = 1;
        t.deg = 1;
        return 0;
    });
    return s;
}

Scalar Scalar::from_qterms(const Ring* r, std::vector<QTerm> t)
{
    Scalar s(r);
    std::sort(t.begin(), t.end(), [](const QTerm& a, const QTerm& b) { return cmp(a, b) < 0; });
    for (auto& x : t) {
        if (!s.q_.empty() && cmp(s.q_.back(), x) == 0)
            s.q_.back().c += x.c;
        else {
            if (!s.q_.empty() && sgn(s.q_.back().c) == 0)
                s.q_.pop_back();
            s.q_.push_back(std::move(x));
        }
    }
    if (!s.q_.empty() && sgn(s.q_.back().c) == 0)
        s.q_.pop_back();
    return s;
}

Scalar Scalar::from_pterms(const Ring* r, std::vector<PTerm> t)
{
    Scalar s(r);
    PF f{r->characteristic()};
    std::sort(t.begin(), t.end(), [](const PTerm& a, const PTerm& b) { return cmp(a, b) < 0; });
    for (auto& x : t) {
        x.c %= f.p;
        if (!s.p_.empty() && cmp(s.p_.back(), x) == 0)
            s.p_.back().c = f.add(s.p_.back().c, x.c);
        else {
            if (!s.p_.empty() && s.p_.back().c == 0)
                s.p_.pop_back();
            s.p_.push_back(std::move(x));
        }
    }
    if (!s.p_.empty() && s.p_.back().c == 0)
        s.p_.pop_back();
    return s;
}

bool Scalar::is_constant() const
{
    if (!q_.empty())
        return q_.size() == 1 && q_[0].deg == 0;
    if (!p_.empty())
        return p_.size() == 1 && p_[0].deg == 0;
    return true;
}

bool Scalar::is_one() const
{
    if (!is_constant() || is_zero())
        return false;
    return !q_.empty() ? q_[0].c == 1 : p_[0].c == 1;
}

uint32_t Scalar::degree() const
{
    uint32_t d = 0;
    for (auto& t : q_)
        d = std::max(d, t.deg);
    for (auto& t : p_)
        d = std::max(d, t.deg);
    return d;
}

mpq_class Scalar::rational_value() const
{
    if (!is_constant())
        throw Error("scalar '" + str() + "' is not a constant");
    if (ring_->characteristic() != 0)
        throw Error("rational_value on a characteristic-p scalar");
    return q_.empty() ? mpq_class(0) : q_[0].c;
}

uint32_t Scalar::residue() const
{
    if (!is_constant())
        throw Error("scalar '" + str() + "' is not a constant");
    if (ring_->characteristic() == 0)
        throw Error("residue on a characteristic-0 scalar");
    return p_.empty() ? 0 : p_[0].c;
}

Scalar Scalar::operator+(const Scalar& b) const
{
    same_ring(*this, b);
    Scalar s(ring_);
    ScalarImpl::with_field(ring_, [&](auto f) {
        ScalarImpl::v(s, f) = addv(f, ScalarImpl::v(*this, f), ScalarImpl::v(b, f), false);
        return 0;
    });
    return s;
}

Scalar Scalar::operator-(const Scalar& b) const
{
    same_ring(*this, b);
    Scalar s(ring_);
    ScalarImpl::with_field(ring_, [&](auto f) {
        ScalarImpl::v(s, f) = addv(f, ScalarImpl::v(*this, f), ScalarImpl::v(b, f), true);
        return 0;
    });
    return s;
}

Scalar Scalar::operator*(const Scalar& b) const
{
    same_ring(*this, b);
    Scalar s(ring_);
    ScalarImpl::with_field(ring_, [&](auto f) {
        ScalarImpl::v(s, f) = mulv(f, ScalarImpl::v(*this, f), ScalarImpl::v(b, f));
        return 0;
    });
    return s;
}

Scalar Scalar::operator-() const
{
    Scalar s(*this);
    if (!ring_)
        return s;
    ScalarImpl::with_field(ring_, [&](auto f) {
        for (auto& t : ScalarImpl::v(s, f))
            t.c = f.neg(t.c);
        return 0;
    });
    return s;
}

bool Scalar::operator==(const Scalar& b) const
{
    if (is_zero() && b.is_zero())
        return ring_ == b.ring_ || !ring_ || !b.ring_;
    if (ring_ != b.ring_ || q_.size() != b.q_.size() || p_.size() != b.p_.size())
        return false;
    for (size_t i = 0; i < q_.size(); ++i)
        if (q_[i].e != b.q_[i].e || q_[i].c != b.q_[i].c)
            return false;
    for (size_t i = 0; i < p_.size(); ++i)
        if (p_[i].e != b.p_[i].e || p_[i].c != b.p_[i].c)
            return false;
    return true;
}

Scalar Scalar::pow(unsigned k) const
{
    Scalar r = constant(ring_, 1), b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

// ---------------------------------------------------------------- printing

namespace {

template <class C>
void put_monomial(std::ostringstream& os, const Ring* r, const Term<C>& t, bool coef_printed)
{
    bool first = !coef_printed;
    for (size_t i = 0; i < t.e.size(); ++i) {
        if (!t.e[i])
            continue;
        if (!first)
            os << '*';
        first = false;
        os << r->params()[i];
        if (t.e[i] > 1)
            os << '^' << t.e[i];
    }
}

} // namespace

std::string Scalar::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    if (ring_->characteristic() == 0) {
        for (size_t i = 0; i < q_.size(); ++i) {
            const auto& t = q_[i];
            mpq_class a = abs(t.c);
            if (i == 0)
                os << (sgn(t.c) < 0 ? "-" : "");
            else
                os << (sgn(t.c) < 0 ? " - " : " + ");
            bool show = t.deg == 0 || a != 1;
            if (show)
                os << a.get_str();
            put_monomial(os, ring_, t, show);
        }
    } else {
        for (size_t i = 0; i < p_.size(); ++i) {
            const auto& t = p_[i];
            if (i)
                os << " + ";
            bool show = t.deg == 0 || t.c != 1;
            if (show)
                os << t.c;
            put_monomial(os, ring_, t, show);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct ScalarParser {
    const Ring* r;
    std::string_view s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error("scalar parse error at column " + std::to_string(i + 1) + " in '" + std::string(s) +
                    "': " + msg);
    }
    void ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c)
    {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Scalar expr()
    {
        ws();
        Scalar acc(r);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = term();
        if (neg)
            acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    Scalar term()
    {
        Scalar acc = factor();
        for (;;) {
            if (eat('*'))
                acc = acc * factor();
            else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero())
                    fail("division by zero");
                acc = divide_exact(acc, d);
            } else
                return acc;
        }
    }
    Scalar factor()
    {
        if (eat('-'))
            return -factor();
        Scalar b = base();
        if (eat('^')) {
            ws();
            size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (st == i)
                fail("expected exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(std::string(s.substr(st, i - st)))));
        }
        return b;
    }
    Scalar base()
    {
        ws();
        if (i >= s.size())
            fail("unexpected end of input");
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        size_t st = i;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            return Scalar::rational(r, mpq_class(mpz_class(std::string(s.substr(st, i - st)))));
        }
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name(s.substr(st, i - st));
            if (r->index_of(name) < 0)
                fail("unknown parameter '" + name + "'");
            return Scalar::var(r, name);
        }
        fail(std::string("unexpected character '") + s[i] + "'");
    }
};

} // namespace

Scalar Scalar::parse(const Ring* r, std::string_view text)
{
    ScalarParser p{r, text};
    Scalar v = p.expr();
    p.ws();
    if (p.i != text.size())
        p.fail("trailing input");
    return v;
}

// ---------------------------------------------------------------- division, substitution

Scalar divide_exact(const Scalar& a, const Scalar& b)
{
    same_ring(a, b);
    const Ring* r = a.ring();
    if (b.is_zero())
        throw Error(r->characteristic() == 2 ? "division by zero (2 = 0 in characteristic 2)" : "division by zero");
    Scalar out(r);
    ScalarImpl::with_field(r, [&](auto f) {
        using TT = Term<typename decltype(f)::T>;
        const auto& B = ScalarImpl::v(b, f);
        if (B.size() == 1 && B[0].deg == 0) {
            Scalar inv(r);
            ScalarImpl::v(inv, f).push_back(const_term(r, f.inv(B[0].c)));
            out = a * inv;
            return 0;
        }
        const TT& lb = B[0];
        auto linv = f.inv(lb.c);
        Scalar rem = a;
        std::vector<TT> q;
        while (!rem.is_zero()) {
            const TT& lr = ScalarImpl::v(rem, f)[0];
            TT t;
            t.e = lr.e;
            for (size_t k = 0; k < t.e.size(); ++k) {
                if (t.e[k] < lb.e[k])
                    throw Error("inexact division: '" + a.str() + "' is not divisible by '" + b.str() + "'");
                t.e[k] = static_cast<uint16_t>(t.e[k] - lb.e[k]);
            }
            t.deg = lr.deg - lb.deg;
            t.c = f.mul(lr.c, linv);
            Scalar ts(r);
            ScalarImpl::v(ts, f).push_back(t);
            rem = rem - ts * b;
            q.push_back(std::move(t));
        }
        Scalar qs(r);
        ScalarImpl::v(qs, f) = std::move(q);
        out = qs;
        return 0;
    });
    return out;
}

Scalar Scalar::embed(const Ring* target) const
{
    if (target == ring_)
        return *this;
    if (target->characteristic() != ring_->characteristic())
        throw Error("cannot embed " + ring_->describe() + " into " + target->describe());
    std::vector<int> map(ring_->nparams(), -1);
    for (size_t i = 0; i < map.size(); ++i)
        map[i] = target->index_of(ring_->params()[i]);
    Scalar s(target);
    ScalarImpl::with_field(ring_, [&](auto f) {
        using TT = Term<typename decltype(f)::T>;
        std::vector<TT> out;
        for (auto& t : ScalarImpl::v(*this, f)) {
            TT u;
            u.e.assign(target->nparams(), 0);
            for (size_t i = 0; i < t.e.size(); ++i) {
                if (!t.e[i])
                    continue;
                if (map[i] < 0)
                    throw Error("parameter '" + ring_->params()[i] + "' missing from " + target->describe());
                u.e[map[i]] = t.e[i];
            }
            u.deg = t.deg;
            u.c = t.c;
            out.push_back(std::move(u));
        }
        if constexpr (std::is_same_v<decltype(f), QF>)
            s = from_qterms(target, std::move(out));
        else
            s = from_pterms(target, std::move(out));
        return 0;
    });
    return s;
}

Scalar substitute(const Scalar& a, const std::map<std::string, Scalar>& bindings)
{
    const Ring* src = a.ring();
    const Ring* dst = src;
    for (auto& [name, img] : bindings) {
        if (src->index_of(name) < 0)
            throw Error("substitute: unknown parameter '" + name + "' in " + src->describe());
        if (dst == src)
            dst = img.ring();
        else if (img.ring() != dst)
            throw Error("substitute: images live in different rings");
    }
    if (dst->characteristic() != src->characteristic())
        throw Error("substitute: characteristic mismatch");
    // image of each parameter
    std::vector<Scalar> img(src->nparams());
    for (size_t i = 0; i < src->nparams(); ++i) {
        auto it = bindings.find(src->params()[i]);
        if (it != bindings.end())
            img[i] = it->second;
        else if (dst->index_of(src->params()[i]) >= 0)
            img[i] = Scalar::var(dst, src->params()[i]);
    }
    Scalar out(dst);
    ScalarImpl::with_field(src, [&](auto f) {
        for (auto& t : ScalarImpl::v(a, f)) {
            Scalar c(dst);
            ScalarImpl::v(c, f).push_back(const_term(dst, t.c));
            for (size_t i = 0; i < t.e.size(); ++i) {
                if (!t.e[i])
                    continue;
                if (!img[i].ring())
                    throw Error("substitute: unbound parameter '" + src->params()[i] + "' has no image in " +
                                dst->describe());
                c = c * img[i].pow(t.e[i]);
            }
            out = out + c;
        }
        return 0;
    });
    return out;
}

std::vector<std::string> support_vars(const Scalar& a)
{
    std::vector<bool> used(a.ring() ? a.ring()->nparams() : 0, false);
    for (auto& t : a.qterms())
        for (size_t i = 0; i < t.e.size(); ++i)
            used[i] = used[i] || t.e[i];
    for (auto& t : a.pterms())
        for (size_t i = 0; i < t.e.size(); ++i)
            used[i] = used[i] || t.e[i];
    std::vector<std::string> out;
    for (size_t i = 0; i < used.size(); ++i)
        if (used[i])
            out.push_back(a.ring()->params()[i]);
    return out;
}

// ---------------------------------------------------------------- specialization

Specialization make_specialization(const Ring* ring, uint64_t seed, uint32_t p,
                                   const std::vector<std::string>& nonzero,
                                   const std::vector<std::string>& distinct)
{
    if (!is_prime(p))
        throw Error("specialization target " + std::to_string(p) + " is not a prime");
    if (ring->characteristic() != 0 && ring->characteristic() != p)
        throw Error("cannot specialize " + ring->describe() + " into GF(" + std::to_string(p) + ")");
    for (auto& n : nonzero)
        if (ring->index_of(n) < 0)
            throw Error("specialization constraint on unknown parameter '" + n + "'");
    for (auto& n : distinct)
        if (ring->index_of(n) < 0)
            throw Error("specialization constraint on unknown parameter '" + n + "'");
    if (!distinct.empty() && distinct.size() > p - 1)
        throw Error("unsatisfiable constraints: " + std::to_string(distinct.size()) +
                    " distinct nonzero values requested in GF(" + std::to_string(p) + ")");
    std::mt19937_64 rng(seed);
    Specialization s;
    s.p = p;
    s.names = ring->params();
    s.values.assign(ring->nparams(), 0);
    std::vector<uint32_t> pool;
    if (!distinct.empty()) {
        for (uint32_t v = 1; v < p && pool.size() < 4096; ++v)
            pool.push_back(v);
        for (size_t k = 0; k < distinct.size(); ++k) {
            std::uniform_int_distribution<size_t> d(k, pool.size() - 1);
            std::swap(pool[k], pool[d(rng)]);
        }
    }
    for (size_t i = 0; i < ring->nparams(); ++i) {
        const auto& n = ring->params()[i];
        auto dit = std::find(distinct.begin(), distinct.end(), n);
        if (dit != distinct.end()) {
            s.values[i] = pool[dit - distinct.begin()];
            continue;
        }
        bool nz = std::find(nonzero.begin(), nonzero.end(), n) != nonzero.end();
        std::uniform_int_distribution<uint32_t> d(nz ? 1 : 0, p - 1);
        s.values[i] = d(rng);
    }
    return s;
}

uint32_t Scalar::evaluate(const Specialization& sp) const
{
    if (is_zero())
        return 0;
    uint32_t p = sp.p;
    if (sp.values.size() != ring_->nparams())
        throw Error("specialization does not match " + ring_->describe());
    if (ring_->characteristic() != 0 && ring_->characteristic() != p)
        throw Error("cannot evaluate " + ring_->describe() + " in GF(" + std::to_string(p) + ")");
    PF f{p};
    uint32_t acc = 0;
    auto mono = [&](const Exps& e) {
        uint32_t v = 1;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                v = f.mul(v, sp.values[i] % p);
        return v;
    };
    for (auto& t : q_)
        acc = f.add(acc, f.mul(reduce_rational(t.c, p), mono(t.e)));
    for (auto& t : p_)
        acc = f.add(acc, f.mul(t.c, mono(t.e)));
    return acc;
}

Scalar Scalar::specialize(const Specialization& s) const
{
    return constant(Ring::get(s.p), static_cast<long>(evaluate(s)));
}

uint32_t random_specialize(const Scalar& a, uint64_t seed, uint32_t p, const std::vector<std::string>& nonzero,
                           const std::vector<std::string>& distinct)
{
    return a.evaluate(make_specialization(a.ring(), seed, p, nonzero, distinct));
}

} // namespace salg
