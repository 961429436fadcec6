#include "pbern/pbern.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pbern {

namespace {

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace

Rational harmonic(int n) {
    require_nonnegative(n, "harmonic: n");
    Rational h;
    for (int j = 1; j <= n; ++j) h += Rational(1, j);
    return h;
}

std::vector<Rational> harmonic_table(int n_max) {
    require_nonnegative(n_max, "harmonic_table: n_max");
    std::vector<Rational> h(static_cast<size_t>(n_max) + 1);
    for (int j = 1; j <= n_max; ++j) h[j] = h[j - 1] + Rational(1, j);
    return h;
}

std::vector<Rational> pbern_hypergeometric(int n_max, int p) {
    require_nonnegative(n_max, "pbern_hypergeometric: n_max");
    require_nonnegative(p, "pbern_hypergeometric: p");

    // Inner series z = 1 - e^t: constant 0, then -1/j!.
    TruncatedSeries g = -expm1_series(n_max);

    // f_m = (1)_m (1)_m / ((p+2)_m m!) = m!/(p+2)_m.
    std::vector<Rational> f(static_cast<size_t>(n_max) + 1);
    for (int m = 0; m <= n_max; ++m)
        f[m] = factorial(static_cast<unsigned long>(m)) /
               rising_factorial(Rational(p + 2), static_cast<unsigned long>(m));

    const TruncatedSeries egf = compose(f, g);
    std::vector<Rational> out(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        out[n] = egf.coeff(n) * factorial(static_cast<unsigned long>(n));
    return out;
}

LaurentSeries pbern_closed_form_laurent(int n_max, int p) {
    require_nonnegative(n_max, "pbern_closed_form_laurent: n_max");
    require_nonnegative(p, "pbern_closed_form_laurent: p");

    // Numerators are padded so every summand, after its shift by -(k+1), is
    // still trusted through t^{n_max+1}.
    const int work_order = n_max + p + 2;
    const std::vector<Rational> h = harmonic_table(p);
    const Rational p1(p + 1);

    std::vector<Rational> lin(static_cast<size_t>(work_order) + 1);
    lin[0] = -h[p];
    lin[1] = Rational(1);
    const TruncatedSeries t_minus_hp(std::move(lin));
    const TruncatedSeries num_main = p1 * (t_minus_hp * exp_series(Rational(p), work_order));
    LaurentSeries total = divide_by_expm1_pow(num_main, p + 1);

    for (int k = 1; k <= p; ++k) {
        const Rational scale = p1 * binomial(p, k) * h[k];
        const TruncatedSeries num_k = TruncatedSeries::constant(scale, work_order);
        total = total + divide_by_expm1_pow(num_k, k + 1);
    }
    return total;
}

std::vector<Rational> pbern_closed_form(int n_max, int p) {
    const LaurentSeries assembled = pbern_closed_form_laurent(n_max, p);
    const TruncatedSeries egf = to_power_series(assembled).truncated(n_max);
    std::vector<Rational> out(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        out[n] = egf.coeff(n) * factorial(static_cast<unsigned long>(n));
    return out;
}

namespace {

PBernoulliTable make_table_shell(int n_max, int p_max) {
    PBernoulliTable table;
    table.n_max = n_max;
    table.p_max = p_max;
    table.values.assign(static_cast<size_t>(n_max) + 1,
                        std::vector<Rational>(static_cast<size_t>(p_max) + 1));
    return table;
}

void fill_column(PBernoulliTable& table, int p, bool check_closed_form) {
    const std::vector<Rational> col = pbern_hypergeometric(table.n_max, p);
    if (check_closed_form) {
        const std::vector<Rational> alt = pbern_closed_form(table.n_max, p);
        for (int n = 0; n <= table.n_max; ++n)
            if (col[n] != alt[n])
                throw std::runtime_error("pbern_table: methods disagree at n=" +
                                         std::to_string(n) + " p=" + std::to_string(p) +
                                         ": " + col[n].str() + " vs " + alt[n].str());
    }
    for (int n = 0; n <= table.n_max; ++n) table.values[n][p] = col[n];
}

}  // namespace

PBernoulliTable pbern_table_serial(int n_max, int p_max, bool check_closed_form) {
    require_nonnegative(n_max, "pbern_table: n_max");
    require_nonnegative(p_max, "pbern_table: p_max");
    PBernoulliTable table = make_table_shell(n_max, p_max);
    for (int p = 0; p <= p_max; ++p) fill_column(table, p, check_closed_form);
    return table;
}

PBernoulliTable pbern_table(int n_max, int p_max, bool check_closed_form) {
    require_nonnegative(n_max, "pbern_table: n_max");
    require_nonnegative(p_max, "pbern_table: p_max");
    PBernoulliTable table = make_table_shell(n_max, p_max);

    // Columns are independent; higher p costs more, hence dynamic schedule.
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int p = 0; p <= p_max; ++p) {
        try {
            fill_column(table, p, check_closed_form);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

std::optional<CellMismatch> find_first_mismatch(const PBernoulliTable& a,
                                                const PBernoulliTable& b) {
    if (a.n_max != b.n_max || a.p_max != b.p_max)
        throw std::invalid_argument("find_first_mismatch: tables have different extents");
    for (int n = 0; n <= a.n_max; ++n)
        for (int p = 0; p <= a.p_max; ++p)
            if (a.values[n][p] != b.values[n][p])
                return CellMismatch{n, p, a.values[n][p], b.values[n][p]};
    return std::nullopt;
}

VerifyReport verify_methods(int n_max, int p_max, bool parallel) {
    require_nonnegative(n_max, "verify_methods: n_max");
    require_nonnegative(p_max, "verify_methods: p_max");

    VerifyReport report;
    report.columns.resize(static_cast<size_t>(p_max) + 1);
    std::vector<std::optional<CellMismatch>> mismatches(static_cast<size_t>(p_max) + 1);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (int p = 0; p <= p_max; ++p) {
        ColumnStatus& status = report.columns[static_cast<size_t>(p)];
        status.p = p;
        try {
            const std::vector<Rational> a = pbern_hypergeometric(n_max, p);
            const std::vector<Rational> b = pbern_closed_form(n_max, p);
            status.ok = true;
            for (int n = 0; n <= n_max; ++n) {
                if (a[n] != b[n]) {
                    status.ok = false;
                    status.detail = "mismatch at n=" + std::to_string(n) + ": hypergeometric " +
                                    a[n].str() + ", closed form " + b[n].str();
                    mismatches[static_cast<size_t>(p)] = CellMismatch{n, p, a[n], b[n]};
                    break;
                }
            }
        } catch (const nonzero_pole_error& e) {
            status.ok = false;
            status.detail = std::string("pole cancellation failed: ") + e.what();
        } catch (const std::exception& e) {
            status.ok = false;
            status.detail = e.what();
        }
    }

    report.ok = std::all_of(report.columns.begin(), report.columns.end(),
                            [](const ColumnStatus& c) { return c.ok; });
    for (const auto& m : mismatches) {
        if (m) {
            report.first_mismatch = m;
            break;
        }
    }
    return report;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    static const Rational kZero;
    if (i < 0) throw std::out_of_range("Polynomial: negative power");
    return i > degree() ? kZero : c_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::vector<Polynomial> pbern_polynomials(int n_max, int p) {
    require_nonnegative(n_max, "pbern_polynomials: n_max");
    require_nonnegative(p, "pbern_polynomials: p");
    const std::vector<Rational> numbers = pbern_hypergeometric(n_max, p);
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            c[static_cast<size_t>(n - j)] = binomial(n, j) * numbers[static_cast<size_t>(j)];
        polys.emplace_back(std::move(c));
    }
    return polys;
}

}  // namespace pbern
