#include <doctest.h>

#include <random>

#include "pbern/series.hpp"
#include "oracles.hpp"

using pbern::LaurentSeries;
using pbern::Rational;
using pbern::TruncatedSeries;

namespace {

TruncatedSeries ts(std::vector<Rational> c) { return TruncatedSeries(std::move(c)); }

}  // namespace

TEST_CASE("addition truncates to the shared order") {
    const TruncatedSeries a = ts({1, 1});        // 1 + t
    const TruncatedSeries b = ts({1, -1});       // 1 - t
    CHECK(a + b == ts({2, 0}));
    CHECK((a + b).order() == 1);

    const TruncatedSeries longer = ts({5, 0, 0, 0});
    CHECK((a + longer).order() == 1);  // min-order rule

    const TruncatedSeries zero = TruncatedSeries::zero(1);
    CHECK(a + zero == a);

    // e^t - 1, by hand: coefficients 1/j!
    const TruncatedSeries e = pbern::exp_series(Rational(1), 4);
    CHECK(e + TruncatedSeries::constant(Rational(-1), 4) ==
          ts({0, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
}

TEST_CASE("multiplication is the exact Cauchy product") {
    const TruncatedSeries a = ts({Rational(1, 3), 2, Rational(-5, 7)});
    CHECK(a * TruncatedSeries::constant(Rational(1), 2) == a);

    const TruncatedSeries t = ts({0, 1, 0});
    CHECK(t * t == ts({0, 0, 1}));

    // (e^t - 1)^2 to order 4, hand-multiplied
    const TruncatedSeries em1 = pbern::expm1_series(4);
    CHECK(em1 * em1 == ts({0, 0, 1, 1, Rational(7, 12)}));
}

TEST_CASE("exp_series coefficients are c^j / j!") {
    CHECK(pbern::exp_series(Rational(0), 3) == ts({1, 0, 0, 0}));
    CHECK(pbern::exp_series(Rational(1), 3) == ts({1, 1, Rational(1, 2), Rational(1, 6)}));
    CHECK(pbern::exp_series(Rational(2), 2) == ts({1, 2, 2}));
}

TEST_CASE("ring axioms hold exactly on random series") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        const TruncatedSeries a = oracles::random_series(rng, 8);
        const TruncatedSeries b = oracles::random_series(rng, 8);
        const TruncatedSeries c = oracles::random_series(rng, 8);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("invert is the exact multiplicative inverse") {
    const TruncatedSeries one = TruncatedSeries::constant(Rational(1), 3);
    CHECK(pbern::invert(one) == one);

    const TruncatedSeries geo = pbern::invert(ts({1, -1, 0, 0}));
    CHECK(geo == ts({1, 1, 1, 1}));

    // (e^t-1)/t inverts to t/(e^t-1), the classical Bernoulli EGF
    const auto bern = oracles::classical_bernoulli(2);
    const TruncatedSeries u_inv = pbern::invert(pbern::expm1_over_t_series(2));
    for (int j = 0; j <= 2; ++j)
        CHECK(u_inv.coeff(j) == bern[j] / pbern::factorial(j));

    CHECK_THROWS_AS(pbern::invert(ts({0, 1})), std::invalid_argument);

    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        TruncatedSeries a = oracles::random_series(rng, 7);
        if (a.coeff(0).is_zero()) a += TruncatedSeries::constant(Rational(1), 7);
        CHECK(a * pbern::invert(a) == TruncatedSeries::constant(Rational(1), 7));
    }
}

TEST_CASE("compose substitutes a zero-constant series") {
    // geometric f at g = t
    const std::vector<Rational> geometric(4, Rational(1));
    CHECK(pbern::compose(geometric, ts({0, 1, 0, 0})) == ts({1, 1, 1, 1}));

    // g = 0: only the constant survives
    const std::vector<Rational> f = {Rational(9, 2), 3, 7};
    CHECK(pbern::compose(f, TruncatedSeries::zero(5)) ==
          TruncatedSeries::constant(Rational(9, 2), 5));

    // f_m = m!/(2)_m = 1/(m+1) at g = 1-e^t gives t/(e^t-1)
    std::vector<Rational> f2;
    for (int m = 0; m <= 3; ++m) f2.emplace_back(1, m + 1);
    const TruncatedSeries g = -pbern::expm1_series(3);
    CHECK(pbern::compose(f2, g) == ts({1, Rational(-1, 2), Rational(1, 12), 0}));

    CHECK_THROWS_AS(pbern::compose(f, ts({1, 1})), std::invalid_argument);
}

TEST_CASE("compose agrees with Horner evaluation on random inputs") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<int> deg(0, 9);
        std::vector<Rational> f(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : f) x = oracles::random_rational(rng);
        TruncatedSeries g = oracles::random_series(rng, 7);
        g -= TruncatedSeries::constant(g.coeff(0), 7);  // force g(0) = 0
        CHECK(pbern::compose(f, g) == oracles::horner_compose(f, g));
    }
}

TEST_CASE("laurent normalization strips leading zeros") {
    const LaurentSeries a(-2, {0, 0, 3, 1});
    CHECK(a.valuation() == 0);
    CHECK(a.max_exponent() == 1);
    CHECK(a.coeff(0) == Rational(3));
    CHECK(a.coeff(-5) == Rational(0));  // below valuation: exact zero

    CHECK(LaurentSeries(4, {0, 0}).is_zero());
    CHECK(LaurentSeries() == LaurentSeries(1, {0}));
}

TEST_CASE("laurent addition aligns exponents and renormalizes") {
    const LaurentSeries a(-1, {1, 1});   // 1/t + 1
    const LaurentSeries b(-1, {-1, 1});  // -1/t + 1
    const LaurentSeries c(-1, {1, 0});   // 1/t

    CHECK((a + -a).is_zero());
    CHECK(c + b == LaurentSeries(0, {1}));        // pole cancels, valuation moves up
    CHECK(a + c == LaurentSeries(-1, {2, 1}));    // 2/t + 1
    CHECK(a + LaurentSeries() == a);

    // trust stops at the shorter operand
    const LaurentSeries wide(-1, {1, 1, 1, 1});
    const LaurentSeries narrow(-1, {1});
    CHECK((narrow + wide).max_exponent() == -1);
    CHECK((narrow + wide).coeff(-1) == Rational(2));
}

TEST_CASE("laurent multiplication tracks valuations and trusted range") {
    const LaurentSeries a(-2, {1, 0, 5});
    const LaurentSeries b(3, {2, 1});
    const LaurentSeries ab = a * b;
    CHECK(ab.valuation() == 1);
    CHECK(ab.coeff(1) == Rational(2));
    CHECK(ab.coeff(2) == Rational(1));
    CHECK(ab.max_exponent() == 2);  // min(-2+4, 3+0)
    CHECK((a * LaurentSeries()).is_zero());
}

TEST_CASE("to_power_series accepts pole-free input and names offenders") {
    const LaurentSeries ok(0, {4, 5});
    CHECK(pbern::to_power_series(ok) == ts({4, 5}));

    CHECK(pbern::to_power_series(LaurentSeries()).is_zero());

    const LaurentSeries bad(-1, {1, 2});
    CHECK_THROWS_AS(pbern::to_power_series(bad), pbern::nonzero_pole_error);
    try {
        pbern::to_power_series(bad);
    } catch (const pbern::nonzero_pole_error& e) {
        CHECK(e.exponent == -1);
        CHECK(e.coefficient == Rational(1));
        CHECK(std::string(e.what()).find("-1") != std::string::npos);
    }

    // gap below valuation 2 is filled with exact zeros
    const LaurentSeries shifted(2, {7});
    CHECK(pbern::to_power_series(shifted) == ts({0, 0, 7}));
}

TEST_CASE("divide_by_expm1_pow factors the pole exactly") {
    // num = t: t/(e^t-1), the classical Bernoulli EGF
    const LaurentSeries bern = pbern::divide_by_expm1_pow(ts({0, 1, 0, 0, 0, 0}), 1);
    CHECK(bern.valuation() == 0);
    CHECK(bern.coeff(0) == Rational(1));
    CHECK(bern.coeff(1) == Rational(-1, 2));
    CHECK(bern.coeff(2) == Rational(1, 12));
    CHECK(bern.coeff(3) == Rational(0));
    CHECK(bern.coeff(4) == Rational(-1, 720));

    // num = 1: simple pole with unit residue
    const LaurentSeries pole = pbern::divide_by_expm1_pow(TruncatedSeries::constant(1, 0), 1);
    CHECK(pole.valuation() == -1);
    CHECK(pole.coeff(-1) == Rational(1));

    // num = t^{k+1} cancels the pole: result is invert(u^{k+1}) from exponent 0
    for (int k : {0, 1, 2}) {
        const int power = k + 1;
        const int n = 6;
        TruncatedSeries num = TruncatedSeries::zero(n);
        {
            std::vector<Rational> c(n + 1);
            c[static_cast<size_t>(power)] = Rational(1);
            num = TruncatedSeries(std::move(c));
        }
        const LaurentSeries q = pbern::divide_by_expm1_pow(num, power);
        const TruncatedSeries expected =
            pbern::invert(pbern::pow(pbern::expm1_over_t_series(n), power));
        CHECK(q.valuation() == 0);
        for (int e = 0; e <= n - power; ++e) CHECK(q.coeff(e) == expected.coeff(e));
    }
}

TEST_CASE("divide_by_expm1_pow result times divisor reproduces the numerator") {
    std::mt19937 rng(23);
    for (int k : {0, 1, 2, 3}) {
        const int power = k + 1;
        const int n = 10;
        const TruncatedSeries num = oracles::random_series(rng, n);
        const LaurentSeries q = pbern::divide_by_expm1_pow(num, power);
        const LaurentSeries back = q * LaurentSeries(pbern::pow(pbern::expm1_series(n), power));
        const LaurentSeries numl(num);
        if (numl.is_zero()) continue;
        for (int e = numl.valuation(); e <= back.max_exponent(); ++e)
            CHECK(back.coeff(e) == (e <= numl.max_exponent() ? numl.coeff(e) : Rational(0)));
    }
}

TEST_CASE("divide_by_expm1_pow enforces the requested output order") {
    const TruncatedSeries num = ts({1, 1, 1, 1});
    const LaurentSeries q = pbern::divide_by_expm1_pow(num, 2, 1);
    CHECK(q.max_exponent() == 1);
    CHECK_THROWS_AS(pbern::divide_by_expm1_pow(num, 2, 5), std::invalid_argument);
}
