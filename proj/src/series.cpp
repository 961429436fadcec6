#include "pbern/series.hpp"

#include <algorithm>
#include <string>

namespace pbern {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    return TruncatedSeries(std::vector<Rational>(static_cast<size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
    TruncatedSeries s = zero(order);
    s.c_[0] = value;
    return s;
}

const Rational& TruncatedSeries::coeff(int j) const {
    if (j < 0 || j > order())
        throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(j) +
                                " outside truncation order " + std::to_string(order()));
    return c_[static_cast<size_t>(j)];
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("TruncatedSeries: cannot truncate order " +
                                    std::to_string(order()) + " to " + std::to_string(new_order));
    return TruncatedSeries(
        std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (Rational& x : r.c_) x = -x;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    *this = *this + o;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    *this = *this - o;
    return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[j] = a.c_[j] + b.c_[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[j] = a.c_[j] - b.c_[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (Rational& x : r.c_) x *= s;
    return r;
}

TruncatedSeries exp_series(const Rational& c, int order) {
    if (order < 0) throw std::invalid_argument("exp_series: negative order");
    std::vector<Rational> v(static_cast<size_t>(order) + 1);
    v[0] = Rational(1);
    for (int j = 1; j <= order; ++j) v[j] = v[j - 1] * c / Rational(j);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries expm1_series(int order) {
    TruncatedSeries e = exp_series(Rational(1), order);
    return e - TruncatedSeries::constant(Rational(1), order);
}

TruncatedSeries expm1_over_t_series(int order) {
    if (order < 0) throw std::invalid_argument("expm1_over_t_series: negative order");
    std::vector<Rational> v(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) v[j] = Rational(1) / factorial(static_cast<unsigned long>(j) + 1);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries pow(const TruncatedSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    TruncatedSeries r = TruncatedSeries::constant(Rational(1), a.order());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

TruncatedSeries invert(const TruncatedSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::invalid_argument("invert: series has zero constant term");
    const int n = a.order();
    std::vector<Rational> b(static_cast<size_t>(n) + 1);
    const Rational inv0 = Rational(1) / a.coeff(0);
    b[0] = inv0;
    for (int m = 1; m <= n; ++m) {
        Rational s;
        for (int j = 1; j <= m; ++j) s += a.coeff(j) * b[m - j];
        b[m] = -inv0 * s;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries compose(const std::vector<Rational>& f_coeffs, const TruncatedSeries& g) {
    if (!g.coeff(0).is_zero())
        throw std::invalid_argument("compose: inner series has nonzero constant term");
    const int n = g.order();
    // g vanishes at 0, so g^m has valuation >= m and only m <= n contributes.
    const int m_top = std::min<int>(n, static_cast<int>(f_coeffs.size()) - 1);
    TruncatedSeries acc = TruncatedSeries::zero(n);
    TruncatedSeries g_pow = TruncatedSeries::constant(Rational(1), n);
    for (int m = 0; m <= m_top; ++m) {
        if (m > 0) {
            g_pow = g_pow * g;
            if (g_pow.is_zero()) break;
        }
        if (!f_coeffs[static_cast<size_t>(m)].is_zero())
            acc += f_coeffs[static_cast<size_t>(m)] * g_pow;
    }
    return acc;
}

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs)
    : val_(valuation), c_(std::move(coeffs)) {
    normalize();
}

LaurentSeries::LaurentSeries(const TruncatedSeries& ts, int shift)
    : val_(shift), c_(ts.coeffs()) {
    normalize();
}

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = 0;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }
}

int LaurentSeries::valuation() const {
    if (is_zero()) throw std::logic_error("LaurentSeries: zero series has no valuation");
    return val_;
}

int LaurentSeries::max_exponent() const {
    if (is_zero()) throw std::logic_error("LaurentSeries: zero series has no max exponent");
    return val_ + static_cast<int>(c_.size()) - 1;
}

const Rational& LaurentSeries::coeff(int e) const {
    static const Rational kZero;
    if (is_zero()) return kZero;
    if (e < val_) return kZero;  // below the valuation, exactly zero
    if (e > max_exponent())
        throw std::out_of_range("LaurentSeries: exponent " + std::to_string(e) +
                                " beyond truncation " + std::to_string(max_exponent()));
    return c_[static_cast<size_t>(e - val_)];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (Rational& x : r.c_) x = -x;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Trusted on the intersection of what both operands cover.
    const int lo = std::min(a.valuation(), b.valuation());
    const int hi = std::min(a.max_exponent(), b.max_exponent());
    std::vector<Rational> c(static_cast<size_t>(hi - lo) + 1);
    for (int e = lo; e <= hi; ++e)
        c[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    return LaurentSeries(lo, std::move(c));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.is_zero() || b.is_zero()) return LaurentSeries();
    const int lo = a.valuation() + b.valuation();
    const int hi = std::min(a.valuation() + b.max_exponent(),
                            b.valuation() + a.max_exponent());
    std::vector<Rational> c(static_cast<size_t>(hi - lo) + 1);
    for (int i = a.valuation(); i <= a.max_exponent(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = b.valuation(); j <= b.max_exponent() && i + j <= hi; ++j)
            c[static_cast<size_t>(i + j - lo)] += a.coeff(i) * b.coeff(j);
    }
    return LaurentSeries(lo, std::move(c));
}

LaurentSeries operator*(const Rational& s, const LaurentSeries& a) {
    LaurentSeries r = a;
    for (Rational& x : r.c_) x *= s;
    r.normalize();  // s may be zero
    return r;
}

nonzero_pole_error::nonzero_pole_error(int exponent_, Rational coefficient_)
    : std::domain_error("nonzero coefficient " + coefficient_.str() +
                        " at negative exponent t^" + std::to_string(exponent_)),
      exponent(exponent_),
      coefficient(std::move(coefficient_)) {}

LaurentSeries divide_by_expm1_pow(const TruncatedSeries& num, int power,
                                  std::optional<int> out_order) {
    if (power < 1) throw std::invalid_argument("divide_by_expm1_pow: power must be >= 1");
    const int n = num.order();
    if (out_order && n < *out_order + power)
        throw std::invalid_argument(
            "divide_by_expm1_pow: numerator order " + std::to_string(n) +
            " insufficient for requested output order " + std::to_string(*out_order) +
            " (need >= " + std::to_string(*out_order + power) + ")");
    const TruncatedSeries unit = pow(expm1_over_t_series(n), power);
    TruncatedSeries q = num * invert(unit);
    if (out_order) q = q.truncated(*out_order + power);
    return LaurentSeries(q, -power);
}

TruncatedSeries to_power_series(const LaurentSeries& a) {
    if (a.is_zero()) return TruncatedSeries::zero(0);
    for (int e = a.valuation(); e < 0 && e <= a.max_exponent(); ++e)
        if (!a.coeff(e).is_zero()) throw nonzero_pole_error(e, a.coeff(e));
    if (a.max_exponent() < 0) return TruncatedSeries::zero(0);
    std::vector<Rational> c(static_cast<size_t>(a.max_exponent()) + 1);
    for (int e = std::max(0, a.valuation()); e <= a.max_exponent(); ++e)
        c[static_cast<size_t>(e)] = a.coeff(e);
    return TruncatedSeries(std::move(c));
}

}  // namespace pbern
