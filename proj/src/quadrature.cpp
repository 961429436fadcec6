#include "pbern/quadrature.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "pbern/pbern.hpp"

namespace pbern {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kPanelPoints = 15;
constexpr double kNodes[kPanelPoints] = {
    -9.87992518020485377e-01, -9.37273392400705951e-01, -8.48206583410427206e-01,
    -7.24417731360170070e-01, -5.70972172608538830e-01, -3.94151347077563385e-01,
    -2.01194093997434514e-01, 0.0,
    2.01194093997434514e-01,  3.94151347077563385e-01,  5.70972172608538830e-01,
    7.24417731360170070e-01,  8.48206583410427206e-01,  9.37273392400705951e-01,
    9.87992518020485377e-01,
};
constexpr double kWeights[kPanelPoints] = {
    3.07532419961186465e-02, 7.03660474881080689e-02, 1.07159220467171773e-01,
    1.39570677926153908e-01, 1.66269205816993781e-01, 1.86161000015561878e-01,
    1.98431485327111246e-01, 2.02578241925560898e-01,
    1.98431485327111246e-01, 1.86161000015561878e-01, 1.66269205816993781e-01,
    1.39570677926153908e-01, 1.07159220467171773e-01, 7.03660474881080689e-02,
    3.07532419961186465e-02,
};

double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

struct Integrand {
    int p;
    double z;  // 1 - e^t

    double operator()(double x) const {
        return ipow(1.0 - x, p) / (1.0 - z * x);
    }
};

double panel(const Integrand& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < kPanelPoints; ++i) acc += kWeights[i] * f(mid + half * kNodes[i]);
    return acc * half;
}

struct AdaptiveState {
    Integrand f;
    double abs_tol;
    int panels = 0;
    double error_estimate = 0.0;
};

constexpr int kMaxPanels = 1 << 14;
constexpr int kMaxDepth = 40;

double refine(AdaptiveState& st, double a, double b, double whole, double local_tol, int depth) {
    if (++st.panels > kMaxPanels || depth > kMaxDepth)
        throw std::runtime_error("euler_integral: quadrature failed to converge "
                                 "within the subdivision budget");
    const double mid = 0.5 * (a + b);
    const double left = panel(st.f, a, mid);
    const double right = panel(st.f, mid, b);
    const double disagreement = std::abs(left + right - whole);
    if (disagreement <= local_tol) {
        st.error_estimate += disagreement;
        return left + right;
    }
    return refine(st, a, mid, left, 0.5 * local_tol, depth + 1) +
           refine(st, mid, b, right, 0.5 * local_tol, depth + 1);
}

}  // namespace

QuadratureResult euler_integral_detailed(int p, double t, double rel_tol) {
    if (p < 0) throw std::invalid_argument("euler_integral: p must be nonnegative");
    if (!(rel_tol > 0.0) || rel_tol > 1e-6)
        throw std::invalid_argument("euler_integral: rel_tol must lie in (0, 1e-6]");
    if (!std::isfinite(t)) throw std::invalid_argument("euler_integral: t must be finite");

    AdaptiveState st{Integrand{p, 1.0 - std::exp(t)}, 0.0};
    const double whole = panel(st.f, 0.0, 1.0);
    // The integrand is positive, so |whole| scales the relative tolerance.
    st.abs_tol = rel_tol * std::max(std::abs(whole), 1e-300);
    const double value = (p + 1) * refine(st, 0.0, 1.0, whole, st.abs_tol, 0);
    return QuadratureResult{value, (p + 1) * st.error_estimate, st.panels};
}

double euler_integral(int p, double t, double rel_tol) {
    return euler_integral_detailed(p, t, rel_tol).value;
}

double egf_partial_sum(const std::vector<Rational>& coeffs, double t, int n_terms) {
    if (n_terms < 0 || static_cast<size_t>(n_terms) > coeffs.size())
        throw std::invalid_argument("egf_partial_sum: n_terms exceeds coefficient count");
    double acc = 0.0;
    double weight = 1.0;  // t^n / n!
    for (int n = 0; n < n_terms; ++n) {
        acc += coeffs[static_cast<size_t>(n)].to_double() * weight;
        weight *= t / (n + 1);
    }
    return acc;
}

double closed_form_eval(int p, double t) {
    if (p < 0) throw std::invalid_argument("closed_form_eval: p must be nonnegative");
    if (t == 0.0)
        throw std::invalid_argument("closed_form_eval: t = 0 is a removable singularity; "
                                    "use the series routes there");
    if (std::abs(t) < kClosedFormMinAbsT)
        std::cerr << "closed_form_eval: warning: |t| = " << std::abs(t)
                  << " is in the cancellation regime (< " << kClosedFormMinAbsT << ")\n";

    const std::vector<Rational> h = harmonic_table(p);
    const double em1 = std::expm1(t);
    double acc = (p + 1) * (t - h[static_cast<size_t>(p)].to_double()) * std::exp(p * t) /
                 ipow(em1, p + 1);
    for (int k = 1; k <= p; ++k)
        acc += (p + 1) * binomial(p, k).to_double() * h[static_cast<size_t>(k)].to_double() /
               ipow(em1, k + 1);
    return acc;
}

std::vector<EvalReport> cross_validate(int p_max, const std::vector<double>& t_samples,
                                       double rel_tol, double flag_tol) {
    if (p_max < 0) throw std::invalid_argument("cross_validate: p_max must be nonnegative");
    constexpr int kSeriesTerms = 40;

    std::vector<EvalReport> reports;
    reports.reserve(static_cast<size_t>(p_max + 1) * t_samples.size());
    for (int p = 0; p <= p_max; ++p) {
        const std::vector<Rational> coeffs = pbern_hypergeometric(kSeriesTerms, p);
        for (double t : t_samples) {
            EvalReport r;
            r.p = p;
            r.t = t;
            r.integral_value = euler_integral(p, t, rel_tol);
            r.series_value = egf_partial_sum(coeffs, t, kSeriesTerms);
            r.abs_diff_integral_series = std::abs(r.integral_value - r.series_value);
            r.within_tolerance = r.abs_diff_integral_series < flag_tol;
            if (std::abs(t) >= kClosedFormMinAbsT) {
                r.closed_form_value = closed_form_eval(p, t);
                r.abs_diff_integral_closed = std::abs(r.integral_value - *r.closed_form_value);
                r.within_tolerance = r.within_tolerance && *r.abs_diff_integral_closed < flag_tol;
            }
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

}  // namespace pbern
