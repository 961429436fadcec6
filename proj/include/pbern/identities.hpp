#pragma once

#include "pbern/series.hpp"

namespace pbern {

/// H_p == -sum_{s=1}^{p} (-1)^s (1/s) C(p,s), exactly.
bool check_harmonic_alternating(int p);

/// sum_{i=1}^{k} (1/i) C(i,s) == (1/s) C(k,s) for s >= 1 (terms with i < s
/// vanish), exactly.
bool check_binomial_ratio(int k, int s);

/// sum_{k=0}^{p} C(p,k) C(k,s) (e^t-1)^{p-k} == C(p,s) e^{(p-s)t} as series
/// compared coefficient-wise to the given order. Requires 0 <= s <= p.
bool check_vandermonde_exp(int p, int s, int order);

/// H_n equals the integral of (1-x^n)/(1-x) over [0,1], evaluated
/// symbolically: the integrand is the polynomial 1 + x + ... + x^{n-1},
/// integrated term by term. Exact on both sides.
bool check_harmonic_integral(int n);

}  // namespace pbern
