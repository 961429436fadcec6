#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbern/series.hpp"

namespace pbern {

/// H_n = sum_{j=1}^{n} 1/j, H_0 = 0. Exact.
Rational harmonic(int n);

/// H_0 .. H_n_max as one pass.
std::vector<Rational> harmonic_table(int n_max);

/// B_{0,p} .. B_{n_max,p} via the hypergeometric route: substitute
/// z = 1 - e^t into sum_m m!/(p+2)_m z^m and scale coefficient n by n!.
std::vector<Rational> pbern_hypergeometric(int n_max, int p);

/// The closed-form right-hand side assembled as a Laurent series:
///   (p+1)(t - H_p) e^{pt} / (e^t-1)^{p+1}
///     + (p+1) sum_{k=1}^{p} C(p,k) H_k / (e^t-1)^{k+1}
/// with every numerator expanded to order n_max + p + 2 so the sum is
/// trusted through t^{n_max+1}. The individual summands have poles up to
/// order p+1; in the sum those coefficients must cancel exactly.
LaurentSeries pbern_closed_form_laurent(int n_max, int p);

/// B_{0,p} .. B_{n_max,p} via the closed form. Throws nonzero_pole_error if
/// any negative-exponent coefficient of the assembled series survives --
/// that would falsify either the closed form or this implementation.
std::vector<Rational> pbern_closed_form(int n_max, int p);

/// Exact grid of B_{n,p}, values[n][p].
struct PBernoulliTable {
    int n_max = 0;
    int p_max = 0;
    std::vector<std::vector<Rational>> values;

    const Rational& at(int n, int p) const { return values.at(n).at(p); }

    friend bool operator==(const PBernoulliTable& a, const PBernoulliTable& b) {
        return a.n_max == b.n_max && a.p_max == b.p_max && a.values == b.values;
    }
};

/// Grid fill, hypergeometric route per column; when check_closed_form is set
/// each column is recomputed by the closed form and any disagreement throws.
/// Serial reference implementation.
PBernoulliTable pbern_table_serial(int n_max, int p_max, bool check_closed_form = false);

/// Same contract as pbern_table_serial; columns are independent and are
/// filled in parallel when OpenMP is enabled.
PBernoulliTable pbern_table(int n_max, int p_max, bool check_closed_form = false);

struct CellMismatch {
    int n = 0;
    int p = 0;
    Rational hypergeometric_value;
    Rational closed_form_value;
};

/// First cell where two grids disagree, scanning n-major.
std::optional<CellMismatch> find_first_mismatch(const PBernoulliTable& a,
                                                const PBernoulliTable& b);

struct ColumnStatus {
    int p = 0;
    bool ok = false;
    std::string detail;  // failure description, empty when ok
};

struct VerifyReport {
    bool ok = false;
    std::vector<ColumnStatus> columns;
    std::optional<CellMismatch> first_mismatch;
};

/// Computes every column by both routes and compares exactly, including the
/// pole-cancellation requirement baked into the closed form.
VerifyReport verify_methods(int n_max, int p_max, bool parallel = true);

/// Dense polynomial in x with exact coefficients, trailing zeros stripped.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::vector<Rational> c_;  // ascending powers of x
};

/// B_{n,p}(x) for n = 0..n_max, from the binomial convolution
/// B_{n,p}(x) = sum_j C(n,j) B_{j,p} x^{n-j} (the e^{xt} twist of the EGF).
std::vector<Polynomial> pbern_polynomials(int n_max, int p);

}  // namespace pbern
