#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vtx {

struct value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Values are kept in a 64-bit fast path and promoted to GMP only on
/// overflow; results demote back when they fit.
class Rational {
  public:
    Rational() = default;
    Rational(long n) : n_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw value_error("Rational: zero denominator");
        n_ = num;
        d_ = den;
        reduce_small();
    }
    explicit Rational(const mpq_class& q) { assign_big(q); }
    explicit Rational(const std::string& s) {
        mpq_class q(s);
        q.canonicalize();
        assign_big(q);
    }

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    static Rational binomial(long n, unsigned k) {
        Rational r(1);
        for (unsigned t = 0; t < k; ++t) r *= Rational(n - long(t), long(t) + 1);
        return r;
    }
    static Rational factorial(unsigned k) {
        Rational r(1);
        for (unsigned t = 2; t <= k; ++t) r *= Rational(long(t));
        return r;
    }
    /// falling factorial k(k-1)...(k-n+1); 1 when n = 0, 0 when n > k >= 0
    static Rational falling(long k, unsigned n) {
        Rational r(1);
        for (unsigned t = 0; t < n; ++t) r *= Rational(k - long(t));
        return r;
    }

    mpz_class numerator() const { return big_ ? big_->get_num() : mpz_class(long(n_)); }
    mpz_class denominator() const { return big_ ? big_->get_den() : mpz_class(long(d_)); }
    mpq_class to_mpq() const { return big_ ? *big_ : mpq_class(long(n_), long(d_)); }

    bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }

    Rational& operator+=(const Rational& o) {
        if (!big_ && !o.big_) {
            int64_t t1, t2, num, den;
            if (!__builtin_mul_overflow(n_, o.d_, &t1) &&
                !__builtin_mul_overflow(o.n_, d_, &t2) && !__builtin_add_overflow(t1, t2, &num) &&
                !__builtin_mul_overflow(d_, o.d_, &den)) {
                n_ = num;
                d_ = den;
                reduce_small();
                return *this;
            }
        }
        assign_big(to_mpq() + o.to_mpq());
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        if (!big_ && !o.big_) {
            // cross-reduce first to keep intermediates small
            int64_t an = n_, ad = d_, bn = o.n_, bd = o.d_;
            int64_t g1 = std::gcd(an, bd), g2 = std::gcd(bn, ad);
            if (g1 > 1) { an /= g1; bd /= g1; }
            if (g2 > 1) { bn /= g2; ad /= g2; }
            int64_t num, den;
            if (!__builtin_mul_overflow(an, bn, &num) && !__builtin_mul_overflow(ad, bd, &den)) {
                n_ = num;
                d_ = den;
                reduce_small();
                return *this;
            }
        }
        assign_big(to_mpq() * o.to_mpq());
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw value_error("Rational: division by zero");
        if (!o.big_) return *this *= Rational(o.d_, o.n_);
        assign_big(to_mpq() / o.to_mpq());
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        if (!a.big_ && a.n_ != INT64_MIN) {
            Rational r;
            r.n_ = -a.n_;
            r.d_ = a.d_;
            return r;
        }
        Rational r;
        r.assign_big(-a.to_mpq());
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        return a.to_mpq() == b.to_mpq();
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            int64_t t1, t2;
            if (!__builtin_mul_overflow(a.n_, b.d_, &t1) &&
                !__builtin_mul_overflow(b.n_, a.d_, &t2))
                return t1 < t2;
        }
        return a.to_mpq() < b.to_mpq();
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    std::string str() const {
        if (big_) return big_->get_str();
        std::string s = std::to_string(n_);
        if (d_ != 1) s += "/" + std::to_string(d_);
        return s;
    }

  private:
    void reduce_small() {
        if (n_ == INT64_MIN || d_ == INT64_MIN) {
            assign_big(mpq_class(long(n_), long(d_)));
            return;
        }
        if (d_ < 0) {
            n_ = -n_;
            d_ = -d_;
        }
        if (n_ == 0) {
            d_ = 1;
            return;
        }
        int64_t g = std::gcd(n_, d_);
        n_ /= g;
        d_ /= g;
    }
    void assign_big(mpq_class q) {
        q.canonicalize();
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            n_ = q.get_num().get_si();
            d_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_unique<mpq_class>(std::move(q));
        }
    }

    int64_t n_ = 0, d_ = 1;
    std::unique_ptr<mpq_class> big_;  // engaged => authoritative
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace vtx
