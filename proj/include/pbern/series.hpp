#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pbern/rational.hpp"

namespace pbern {

/// Formal power series in t, truncated: coefficients of t^0 .. t^order are
/// stored exactly, nothing is known (or claimed) beyond the order.
///
/// Arithmetic propagates truncation as min(order(a), order(b)); no operation
/// fabricates coefficients its inputs do not justify.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(const Rational& value, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int j) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;

    /// Copy shortened to new_order (<= order()); lengthening would invent
    /// coefficients and is rejected.
    TruncatedSeries truncated(int new_order) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

private:
    std::vector<Rational> c_;  // c_[j] = coefficient of t^j, size = order + 1
};

/// exp(c*t) to the requested order: coefficients c^j / j!.
TruncatedSeries exp_series(const Rational& c, int order);

/// e^t - 1 to the requested order.
TruncatedSeries expm1_series(int order);

/// (e^t - 1)/t to the requested order; unit series, constant term 1.
TruncatedSeries expm1_over_t_series(int order);

/// a^k by repeated multiplication (k >= 0).
TruncatedSeries pow(const TruncatedSeries& a, int k);

/// Multiplicative inverse to the truncation order. Requires nonzero
/// constant term.
TruncatedSeries invert(const TruncatedSeries& a);

/// Substitute g into the series with coefficients f_coeffs (in z):
/// sum_m f_coeffs[m] * g^m, truncated to order(g). Requires g(0) = 0, which
/// makes the sum finite: only m <= order(g) contribute. Missing f
/// coefficients are treated as zero.
TruncatedSeries compose(const std::vector<Rational>& f_coeffs, const TruncatedSeries& g);

/// Laurent series: exact coefficients for exponents valuation() ..
/// max_exponent(); zero below the valuation by definition, unknown above
/// max_exponent() (truncation). Normal form strips leading zeros so a
/// nonzero series has nonzero leading coefficient; the zero series is an
/// explicit empty marker (conceptually valuation +infinity).
class LaurentSeries {
public:
    LaurentSeries() = default;  // zero series
    LaurentSeries(int valuation, std::vector<Rational> coeffs);
    explicit LaurentSeries(const TruncatedSeries& ts, int shift = 0);

    bool is_zero() const { return c_.empty(); }
    int valuation() const;
    int max_exponent() const;

    /// Coefficient of t^e. Exact zero below the valuation; exponents above
    /// max_exponent() are truncated away and rejected.
    const Rational& coeff(int e) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a);

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.val_ == b.val_ && a.c_ == b.c_;  // normal form makes this exact
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) {
        return !(a == b);
    }

private:
    void normalize();

    int val_ = 0;
    std::vector<Rational> c_;  // exponents val_ .. val_ + size - 1
};

/// Thrown when a Laurent series expected to be an honest power series has a
/// nonzero coefficient at a negative exponent.
struct nonzero_pole_error : std::domain_error {
    nonzero_pole_error(int exponent_, Rational coefficient_);
    int exponent;
    Rational coefficient;
};

/// num / (e^t - 1)^power as a Laurent series, power >= 1. Factors
/// (e^t - 1)^power = t^power * u^power with u = (e^t - 1)/t, u(0) = 1, so the
/// division is invert-and-shift and the result valuation is >= -power.
///
/// The result is trusted through exponent order(num) - power. When out_order
/// is given the result is cut there, and num must carry at least
/// out_order + power coefficients.
LaurentSeries divide_by_expm1_pow(const TruncatedSeries& num, int power,
                                  std::optional<int> out_order = std::nullopt);

/// Reinterpret a pole-free Laurent series as a power series of order
/// max_exponent(). Throws nonzero_pole_error naming the first offending
/// exponent otherwise.
TruncatedSeries to_power_series(const LaurentSeries& a);

}  // namespace pbern
