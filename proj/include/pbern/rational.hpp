#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pbern {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin value wrapper around GMP's mpq_class; construction
/// canonicalizes, arithmetic stays canonical.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, enables literals
    Rational(long num, long den) { assign(mpz_class(num), mpz_class(den)); }
    Rational(const mpz_class& num, const mpz_class& den) { assign(num, den); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }

    /// Canonical "num/den" rendering, denominator always present.
    std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    void assign(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// n! as an exact integer.
inline mpz_class factorial_mpz(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Rational factorial(unsigned long n) { return Rational(factorial_mpz(n)); }

/// Binomial coefficient C(n, k); zero when k > n.
inline mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Rational binomial(unsigned long n, unsigned long k) {
    return Rational(binomial_mpz(n, k));
}

/// Rising factorial (a)_m = a(a+1)...(a+m-1), with (a)_0 = 1.
/// Computed by the iterative product, exactly.
inline Rational rising_factorial(const Rational& a, unsigned long m) {
    Rational acc(1);
    Rational term = a;
    for (unsigned long i = 0; i < m; ++i) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

}  // namespace pbern
