#pragma once

#include <optional>
#include <vector>

#include "pbern/rational.hpp"

namespace pbern {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // accumulated panel disagreement
    int panels = 0;
};

/// (p+1) * integral over [0,1] of (1-x)^p / (1 - (1-e^t)x) dx, the Euler
/// integral form of the EGF. The denominator stays away from zero for real t
/// and x in [0,1], so the integrand is smooth for every sample point.
///
/// Adaptive composite Gauss-Legendre: fixed 15-point panels, bisected until
/// the two halves agree with the parent panel within the local tolerance.
/// rel_tol must lie in (0, 1e-6]; throws std::runtime_error when the
/// subdivision budget is exhausted before convergence.
QuadratureResult euler_integral_detailed(int p, double t, double rel_tol);
double euler_integral(int p, double t, double rel_tol);

/// sum_{n < n_terms} coeffs[n] t^n / n! in double precision; each exact
/// coefficient is converted only when consumed. Requires n_terms <=
/// coeffs.size().
double egf_partial_sum(const std::vector<Rational>& coeffs, double t, int n_terms);

/// Direct floating-point evaluation of
///   (p+1)(t - H_p) e^{pt} / (e^t-1)^{p+1}
///     + (p+1) sum_{k=1}^{p} C(p,k) H_k / (e^t-1)^{k+1}.
/// The singularity at t = 0 is removable but not evaluable here; t = 0 is
/// rejected and |t| < 1e-4 triggers a cancellation warning on stderr.
double closed_form_eval(int p, double t);

/// |t| below this is the cancellation regime of closed_form_eval; the exact
/// series routes cover it instead.
inline constexpr double kClosedFormMinAbsT = 1e-4;

/// One (p, t) comparison of the three routes. closed_form_value is absent
/// when |t| < kClosedFormMinAbsT; all engaged fields are finite.
struct EvalReport {
    int p = 0;
    double t = 0.0;
    double integral_value = 0.0;
    double series_value = 0.0;
    std::optional<double> closed_form_value;
    double abs_diff_integral_series = 0.0;
    std::optional<double> abs_diff_integral_closed;
    bool within_tolerance = false;
};

/// Full (p, t) grid of EvalReports, p = 0..p_max, flagged against flag_tol.
/// The series column uses 40 exact EGF terms per p.
std::vector<EvalReport> cross_validate(int p_max, const std::vector<double>& t_samples,
                                       double rel_tol, double flag_tol = 1e-8);

}  // namespace pbern
