#include <doctest.h>

#include <stdexcept>

#include <random>

#include "griff/integer.hpp"
#include "griff/rational.hpp"

using namespace griff;

TEST_CASE("integer basics and string round trips") {
    CHECK(Integer(0).to_string() == "0");
    CHECK(Integer(-1).to_string() == "-1");
    CHECK(Integer(123456789012345678ll).to_string() == "123456789012345678");
    CHECK(Integer::from_string("-987654321987654321987654321").to_string() ==
          "-987654321987654321987654321");
    CHECK_THROWS_AS(Integer::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Integer::from_string("12a3"), std::invalid_argument);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const long long v = static_cast<long long>(rng());
        CHECK(Integer::from_string(Integer(v).to_string()) == Integer(v));
        CHECK(Integer(v).to_long_long() == v);
    }
    const long long ll_min = std::numeric_limits<long long>::min();
    CHECK(Integer(ll_min).to_long_long() == ll_min);
    CHECK(Integer(ll_min).to_string() == "-9223372036854775808");
}

TEST_CASE("magnitudes beyond 10^200 stay exact") {
    const Integer big = Integer::pow(Integer(10), 100) + Integer(7);
    const Integer sq = big * big;
    // (10^100 + 7)^2 = 10^200 + 14*10^100 + 49, a 201-digit number
    std::string expected = "1";
    expected += std::string(98, '0');
    expected += "14";
    expected += std::string(98, '0');
    expected += "49";
    CHECK(sq.to_string() == expected);

    // Two independent routes to C(200, 100): multiplicative formula and a
    // Pascal-triangle row.
    std::vector<Integer> row = {Integer(1)};
    for (int n = 1; n <= 200; ++n) {
        std::vector<Integer> next(static_cast<size_t>(n) + 1, Integer(1));
        for (int k = 1; k < n; ++k) {
            next[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k - 1)] + row[static_cast<size_t>(k)];
        }
        row = std::move(next);
    }
    CHECK(binomial(200, 100) == row[100]);
    CHECK(binomial(200, 100).to_string().size() == 59);  // ~9.05e58
}

TEST_CASE("divmod: truncation semantics and reconstruction") {
    std::mt19937_64 rng(7);
    SUBCASE("agrees with built-in division in 64-bit range") {
        for (int trial = 0; trial < 500; ++trial) {
            const long long a = static_cast<long long>(rng() % 2000003) - 1000001;
            long long b = static_cast<long long>(rng() % 999) - 499;
            if (b == 0) b = 17;
            CHECK(Integer(a) / Integer(b) == Integer(a / b));
            CHECK(Integer(a) % Integer(b) == Integer(a % b));
        }
    }
    SUBCASE("reconstruction across sizes") {
        for (int trial = 0; trial < 400; ++trial) {
            const int la = 1 + static_cast<int>(rng() % 24);
            const int lb = 1 + static_cast<int>(rng() % 12);
            Integer a, b;
            for (int i = 0; i < la; ++i) a = a * Integer(1ll << 32) + Integer(static_cast<long long>(rng() & 0xffffffffull));
            for (int i = 0; i < lb; ++i) b = b * Integer(1ll << 32) + Integer(static_cast<long long>(rng() & 0xffffffffull));
            if (rng() & 1u) a = a.negated();
            if (rng() & 1u) b = b.negated();
            if (b.is_zero()) b = Integer(rng() % 97 + 1);
            const auto [q, r] = Integer::divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.abs() < b.abs());
            if (!r.is_zero()) CHECK(r.signum() == a.signum());
        }
    }
    CHECK_THROWS_AS(Integer(3) / Integer(0), std::domain_error);
}

TEST_CASE("gcd, lcm, pow") {
    CHECK(Integer::gcd(Integer(12), Integer(18)) == Integer(6));
    CHECK(Integer::gcd(Integer(-12), Integer(18)) == Integer(6));
    CHECK(Integer::gcd(Integer(0), Integer(5)) == Integer(5));
    CHECK(Integer::lcm(Integer(4), Integer(6)) == Integer(12));
    CHECK(Integer::pow(Integer(2), 100).to_string() == "1267650600228229401496703205376");
    CHECK(Integer::pow(Integer(0), 0) == Integer(1));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Integer a(static_cast<long long>(rng() % 1000000) - 500000);
        const Integer b(static_cast<long long>(rng() % 1000000) - 500000);
        const Integer g = Integer::gcd(a, b);
        if (!g.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
            CHECK(g.signum() >= 0);
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == Integer(10));
    CHECK(binomial(17, 0) == Integer(1));
    CHECK(binomial(6, 7).is_zero());
    CHECK(binomial(6, -1).is_zero());
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
    for (long long n = 1; n <= 60; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
    CHECK(Rational(Integer(2), Integer(4)).num() == Integer(1));
    CHECK(Rational(Integer(2), Integer(4)).den() == Integer(2));
    CHECK(Rational(Integer(3), Integer(-6)).num() == Integer(-1));
    CHECK(Rational(Integer(3), Integer(-6)).den() == Integer(2));
    CHECK(Rational(Integer(0), Integer(-5)).den() == Integer(1));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("rational arithmetic examples") {
    const Rational sixth(Integer(1), Integer(6));
    const Rational twelfth(Integer(1), Integer(12));
    CHECK(sixth + twelfth == Rational(Integer(1), Integer(4)));
    CHECK(Rational(Integer(-3), Integer(7)) * Rational(Integer(7), Integer(3)) == Rational(-1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(Integer(5), Integer(3)) > Rational(Integer(3), Integer(2)));
    CHECK(Rational(Integer(-5), Integer(3)) < Rational(Integer(-3), Integer(2)));
}

TEST_CASE("rational field axioms on random 128-bit values") {
    std::mt19937_64 rng(2024);
    auto random128 = [&rng]() {
        Integer v;
        for (int i = 0; i < 4; ++i) v = v * Integer(1ll << 32) + Integer(static_cast<long long>(rng() & 0xffffffffull));
        return (rng() & 1u) ? v.negated() : v;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a(random128(), random128().abs() + Integer(1));
        const Rational b(random128(), random128().abs() + Integer(1));
        const Rational c(random128(), random128().abs() + Integer(1));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
        const bool coprime = Integer::gcd(a.num(), a.den()).is_one() || a.num().is_zero();
        CHECK(coprime);
        CHECK(a.den().signum() == 1);
    }
}

TEST_CASE("rat_pow") {
    CHECK(rat_pow(Rational(-1), 3) == Rational(-1));
    CHECK(rat_pow(Rational(Integer(2), Integer(3)), -2) == Rational(Integer(9), Integer(4)));
    CHECK(rat_pow(Rational(5), 0) == Rational(1));
    CHECK(rat_pow(Rational(0), 0) == Rational(1));
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("rational string formats") {
    CHECK(Rational(Integer(-1), Integer(12)).to_string() == "-1/12");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational::from_string("-1/12") == Rational(Integer(-1), Integer(12)));
    CHECK(Rational::from_string("3") == Rational(3));
    CHECK(Rational::from_string("6/4") == Rational(Integer(3), Integer(2)));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("x/2"), std::invalid_argument);
}

TEST_CASE("decimal rendering is approximate but stable") {
    CHECK(Rational(Integer(2), Integer(3)).to_decimal_string(6) == "6.66667e-1");
    CHECK(Rational(Integer(-2), Integer(3)).to_decimal_string(6) == "-6.66667e-1");
    CHECK(Rational(12).to_decimal_string(6) == "1.20000e1");
    CHECK(Rational(Integer(1), Integer(12)).to_decimal_string(6) == "8.33333e-2");
    CHECK(Rational(Integer(9999995), Integer(10000000)).to_decimal_string(6) == "1.00000e0");
    CHECK(Rational(0).to_decimal_string(6) == "0");
}
