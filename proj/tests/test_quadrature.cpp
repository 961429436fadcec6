#include <doctest.h>

#include <cmath>

#include "pbern/pbern.hpp"
#include "pbern/quadrature.hpp"

namespace {
constexpr double kInvEm1 = 0.58197670686932642439;  // 1/(e-1)
}

TEST_CASE("euler integral at t = 0 is exactly the beta normalization") {
    for (int p = 0; p <= 12; ++p)
        CHECK(pbern::euler_integral(p, 0.0, 1e-10) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("euler integral at p = 0, t = 1 hits 1/(e-1)") {
    CHECK(std::abs(pbern::euler_integral(0, 1.0, 1e-10) - kInvEm1) < 1e-12);
}

TEST_CASE("euler integral argument validation") {
    CHECK_THROWS_AS(pbern::euler_integral(-1, 0.5, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(pbern::euler_integral(0, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(pbern::euler_integral(0, 0.5, 1e-3), std::invalid_argument);
}

TEST_CASE("egf partial sums") {
    const auto col2 = pbern::pbern_hypergeometric(40, 2);
    CHECK(pbern::egf_partial_sum(col2, 0.0, 40) == 1.0);
    CHECK(pbern::egf_partial_sum(col2, 3.7, 1) == 1.0);  // single term is B_{0,p}

    const auto col0 = pbern::pbern_hypergeometric(40, 0);
    CHECK(std::abs(pbern::egf_partial_sum(col0, 1.0, 40) - kInvEm1) < 1e-12);

    CHECK(std::abs(pbern::euler_integral(2, 0.5, 1e-10) -
                   pbern::egf_partial_sum(col2, 0.5, 40)) < 1e-9);

    CHECK_THROWS_AS(pbern::egf_partial_sum(col0, 1.0, 42), std::invalid_argument);
}

TEST_CASE("closed form evaluation in double precision") {
    CHECK(std::abs(pbern::closed_form_eval(0, 1.0) - kInvEm1) < 1e-14);
    CHECK(std::abs(pbern::closed_form_eval(0, -1.0) - 1.0 / (1.0 - std::exp(-1.0))) < 1e-14);
    CHECK(std::abs(pbern::closed_form_eval(1, 1.0) - pbern::euler_integral(1, 1.0, 1e-10)) <
          1e-8);
    CHECK_THROWS_AS(pbern::closed_form_eval(0, 0.0), std::invalid_argument);
}

TEST_CASE("cross validation grid") {
    const auto empty = pbern::cross_validate(3, {}, 1e-10);
    CHECK(empty.empty());

    const auto single = pbern::cross_validate(0, {1.0}, 1e-10);
    REQUIRE(single.size() == 1);
    CHECK(single[0].within_tolerance);
    CHECK(single[0].abs_diff_integral_series < 1e-9);
    REQUIRE(single[0].abs_diff_integral_closed.has_value());
    CHECK(*single[0].abs_diff_integral_closed < 1e-9);

    // t = 0 row skips the closed-form column but keeps the other two
    const auto with_zero = pbern::cross_validate(1, {0.0, 0.5}, 1e-10);
    REQUIRE(with_zero.size() == 4);
    CHECK(!with_zero[0].closed_form_value.has_value());
    CHECK(with_zero[1].closed_form_value.has_value());
    for (const auto& r : with_zero) {
        CHECK(std::isfinite(r.integral_value));
        CHECK(std::isfinite(r.series_value));
        CHECK(r.within_tolerance);
    }

    const auto grid = pbern::cross_validate(8, {-1.0, -0.5, 0.25, 0.5, 1.0}, 1e-10);
    CHECK(grid.size() == 45);
    for (const auto& r : grid) {
        CHECK(r.abs_diff_integral_series < 1e-8);
        REQUIRE(r.abs_diff_integral_closed.has_value());
        CHECK(*r.abs_diff_integral_closed < 1e-8);
    }
}

TEST_CASE("refining the tolerance never degrades beyond the prior estimate") {
    const auto col = pbern::pbern_hypergeometric(40, 3);
    for (double t : {-1.0, 0.5, 1.0}) {
        const double oracle = pbern::egf_partial_sum(col, t, 40);
        double rel_tol = 1e-6;
        auto prior = pbern::euler_integral_detailed(3, t, rel_tol);
        double prior_err = std::abs(prior.value - oracle);
        for (int step = 0; step < 6; ++step) {
            rel_tol *= 0.5;
            const auto next = pbern::euler_integral_detailed(3, t, rel_tol);
            const double err = std::abs(next.value - oracle);
            CHECK(err <= prior_err + prior.error_estimate + 1e-15);
            prior = next;
            prior_err = err;
        }
    }
}
