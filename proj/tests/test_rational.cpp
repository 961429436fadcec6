#include <doctest.h>

#include <random>

#include "pbern/rational.hpp"
#include "oracles.hpp"

using pbern::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).denominator() == 1);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays canonical on random inputs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational a = oracles::random_rational(rng);
        const Rational b = oracles::random_rational(rng);
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.denominator() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("string rendering keeps the denominator") {
    CHECK(Rational(1).str() == "1/1");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).str() == "0/1");
}

TEST_CASE("combinatorial helpers") {
    CHECK(pbern::factorial(0) == Rational(1));
    CHECK(pbern::factorial(5) == Rational(120));
    CHECK(pbern::binomial(5, 2) == Rational(10));
    CHECK(pbern::binomial(3, 7) == Rational(0));  // k > n vanishes
    CHECK(pbern::rising_factorial(Rational(3), 0) == Rational(1));
    CHECK(pbern::rising_factorial(Rational(3), 4) == Rational(3 * 4 * 5 * 6));
    CHECK(pbern::rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
}
