#include <doctest.h>

#include <stdexcept>

#include <random>

#include "griff/series.hpp"

using namespace griff;

namespace {

FormalSeries make(std::vector<long long> nums) {
    std::vector<Rational> coeffs;
    for (long long v : nums) coeffs.emplace_back(v);
    return FormalSeries(std::move(coeffs));
}

}  // namespace

TEST_CASE("series multiplication") {
    const FormalSeries one_plus_y = make({1, 1, 0});
    const FormalSeries one_minus_y = make({1, -1, 0});
    CHECK(one_plus_y * one_minus_y == make({1, 0, -1}));

    const FormalSeries p = FormalSeries::one_plus(Rational(1), 3);
    CHECK(p.pow(2) * p == make({1, 3, 3, 1}));

    const FormalSeries f = make({2, -3, 5});
    CHECK(f * FormalSeries::one(2) == f);

    CHECK_THROWS_AS(make({1, 1}) * make({1, 1, 1}), std::domain_error);
}

TEST_CASE("series inversion") {
    CHECK(FormalSeries::one_plus(Rational(1), 3).inverse() == make({1, -1, 1, -1}));
    CHECK(FormalSeries::one(5).inverse() == FormalSeries::one(5));

    // inverse(2 + y) at order 1 is 1/2 - y/4; product check certifies it.
    FormalSeries two_plus_y(1);
    two_plus_y[0] = Rational(2);
    two_plus_y[1] = Rational(1);
    const FormalSeries inv = two_plus_y.inverse();
    CHECK(inv[0] == Rational(Integer(1), Integer(2)));
    CHECK(inv[1] == Rational(Integer(-1), Integer(4)));
    CHECK(two_plus_y * inv == FormalSeries::one(1));

    FormalSeries no_unit(2);
    no_unit[1] = Rational(1);
    CHECK_THROWS_AS(no_unit.inverse(), std::domain_error);
}

TEST_CASE("inverse round trip on random unit series") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 10);
        FormalSeries f(order);
        f[0] = Rational(Integer(1 + static_cast<long long>(rng() % 7)),
                        Integer(1 + static_cast<long long>(rng() % 5)));
        if (rng() & 1u) f[0] = -f[0];
        for (int k = 1; k <= order; ++k) {
            f[k] = Rational(Integer(static_cast<long long>(rng() % 11) - 5),
                            Integer(1 + static_cast<long long>(rng() % 4)));
        }
        CHECK(f * f.inverse() == FormalSeries::one(order));
    }
}

TEST_CASE("fraction coefficient brute force") {
    CHECK(coeff_bruteforce(2, 2, Rational(3)) == Rational(1));
    // (1+y)^2 (1 - 2y + 4y^2 - ...): y^2 coefficient is 4 - 4 + 1.
    CHECK(coeff_bruteforce(2, 0, Rational(2)) == Rational(1));
    // a = 1 collapses to (1+y)^(n-1).
    CHECK(coeff_bruteforce(4, 1, Rational(1)) == Rational(1));
    CHECK_THROWS_AS(coeff_bruteforce(3, -1, Rational(2)), std::domain_error);
    CHECK_THROWS_AS(coeff_bruteforce(3, 4, Rational(2)), std::domain_error);
    CHECK(series_fraction_coeff(3, -1, Rational(2)) == Rational(0));
    // Coefficients beyond y^n exist for the rational function.
    CHECK(series_fraction_coeff(1, 2, Rational(1)) == Rational(0));
    CHECK(series_fraction_coeff(0, 3, Rational(2)) == Rational(-8));
}

TEST_CASE("closed forms: frozen values") {
    CHECK(coeff_closed_sum(2, 2, Rational(5)) == Rational(1));
    CHECK(coeff_closed_sum(2, 0, Rational(2)) == Rational(1));
    CHECK(coeff_closed_sum(3, 1, Rational(2)) == Rational(1));

    CHECK(coeff_closed_remainder(2, 0, Rational(2)) == Rational(1));
    for (long long n = 1; n <= 8; ++n) {
        CHECK(coeff_closed_remainder(n, n, Rational(1)) == Rational(1));
    }
    CHECK(coeff_closed_remainder(3, 2, Rational(3)) == coeff_bruteforce(3, 2, Rational(3)));
    CHECK_THROWS_AS(coeff_closed_remainder(3, 1, Rational(0)), std::domain_error);
}

TEST_CASE("three routes agree over a modest sweep") {
    for (long long n = 0; n <= 8; ++n) {
        for (long long r = 0; r <= n; ++r) {
            for (int av = -3; av <= 7; ++av) {
                if (av == 0) continue;
                const Rational a(av);
                const Rational brute = coeff_bruteforce(n, r, a);
                CHECK(brute == coeff_closed_sum(n, r, a));
                CHECK(brute == coeff_closed_remainder(n, r, a));
            }
        }
    }
}

TEST_CASE("a = 1 collapse to binomial coefficients") {
    for (long long n = 1; n <= 10; ++n) {
        for (long long r = 0; r <= n; ++r) {
            CHECK(coeff_bruteforce(n, r, Rational(1)) == Rational(binomial(n - 1, n - r)));
        }
    }
}
