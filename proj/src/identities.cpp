#include "pbern/identities.hpp"

#include <stdexcept>

#include "pbern/pbern.hpp"

namespace pbern {

bool check_harmonic_alternating(int p) {
    if (p < 0) throw std::invalid_argument("check_harmonic_alternating: p must be nonnegative");
    Rational sum;
    for (int s = 1; s <= p; ++s) {
        const Rational term = Rational(1, s) * binomial(p, s);
        sum += (s % 2 == 0) ? term : -term;
    }
    return harmonic(p) == -sum;
}

bool check_binomial_ratio(int k, int s) {
    if (k < 0) throw std::invalid_argument("check_binomial_ratio: k must be nonnegative");
    if (s < 1) throw std::invalid_argument("check_binomial_ratio: s must be positive");
    Rational lhs;
    for (int i = 1; i <= k; ++i) lhs += Rational(1, i) * binomial(i, s);
    const Rational rhs = Rational(1, s) * binomial(k, s);
    return lhs == rhs;
}

bool check_vandermonde_exp(int p, int s, int order) {
    if (p < 0 || s < 0 || s > p)
        throw std::invalid_argument("check_vandermonde_exp: need 0 <= s <= p");
    if (order < 0) throw std::invalid_argument("check_vandermonde_exp: negative order");

    const TruncatedSeries em1 = expm1_series(order);
    // Walk k from p down so (e^t-1)^{p-k} grows by one factor per step.
    TruncatedSeries em1_pow = TruncatedSeries::constant(Rational(1), order);
    TruncatedSeries lhs = TruncatedSeries::zero(order);
    for (int k = p; k >= 0; --k) {
        const Rational c = binomial(p, k) * binomial(k, s);
        if (!c.is_zero()) lhs += c * em1_pow;
        if (k > 0) em1_pow = em1_pow * em1;
    }
    const TruncatedSeries rhs = binomial(p, s) * exp_series(Rational(p - s), order);
    return lhs == rhs;
}

bool check_harmonic_integral(int n) {
    if (n < 0) throw std::invalid_argument("check_harmonic_integral: n must be nonnegative");
    // (1-x^n)/(1-x) = 1 + x + ... + x^{n-1}; integrate each monomial over [0,1].
    Rational integral;
    for (int i = 0; i < n; ++i) integral += Rational(1, i + 1);
    return integral == harmonic(n);
}

}  // namespace pbern
