#include <doctest.h>

#include <stdexcept>

#include "griff/chow.hpp"
#include "griff/heights.hpp"

using namespace griff;

namespace {

PencilGeometry g(int N, int d, long long de, long long dm) {
    return PencilGeometry(N, d, Integer(de), Integer(dm));
}

}  // namespace

TEST_CASE("generators and components") {
    const PencilGeometry geom = g(2, 3, 1, 2);
    const ChowClass h = ChowClass::hyperplane(geom);
    const ChowClass m = ChowClass::curve_m(geom);
    const ChowClass e = ChowClass::curve_e(geom);
    CHECK(h.h_part(1) == Rational(1));
    CHECK(h.m_part(1) == Rational(0));
    CHECK(m.m_part(1) == Rational(1));
    CHECK(e.e_part(1) == Rational(1));
    CHECK(ChowClass::constant(geom, Rational(1)) * h == h);
    CHECK(h.component(0).is_zero());
    CHECK_THROWS_AS(h.component(4), std::domain_error);
    CHECK_THROWS_AS(h + ChowClass::hyperplane(g(2, 3, 1, 3)), std::domain_error);
}

TEST_CASE("Grothendieck reduction") {
    const PencilGeometry geom = g(1, 2, 3, 5);
    const ChowClass h = ChowClass::hyperplane(geom);
    const ChowClass e = ChowClass::curve_e(geom);
    const ChowClass m = ChowClass::curve_m(geom);
    const ChowClass h2 = h * h;
    CHECK(h2.h_part(2) == Rational(0));
    CHECK(h2.e_part(2) == Rational(-1));
    CHECK((m * e).is_zero());
    CHECK((h + m) * (h - m) == h2);
    for (int N = 1; N <= 5; ++N) {
        const PencilGeometry gm = g(N, 2, -2, 3);
        const ChowClass hh = ChowClass::hyperplane(gm);
        const ChowClass ee = ChowClass::curve_e(gm);
        const ChowClass mm = ChowClass::curve_m(gm);
        const unsigned n = static_cast<unsigned>(N);
        CHECK((hh.pow(n + 1) + ee * hh.pow(n)).is_zero());
        CHECK(hh.pow(n + 2).is_zero());
        CHECK((mm * hh.pow(n + 1)).is_zero());
    }
}

TEST_CASE("unit inversion") {
    const PencilGeometry geom = g(2, 3, 1, 2);
    const ChowClass one = ChowClass::constant(geom, Rational(1));
    const ChowClass h = ChowClass::hyperplane(geom);
    ChowClass geometric = ChowClass(geom);
    for (unsigned k = 0; k <= 3; ++k) geometric = geometric + h.pow(k);
    CHECK((one - h).inverse_unit() == geometric);
    CHECK(one.inverse_unit() == one);
    const ChowClass unit = one - c1_of_pencil(geom);
    CHECK(unit.inverse_unit() * unit == one);
    CHECK_THROWS_AS(h.inverse_unit(), std::domain_error);
}

TEST_CASE("binomial expansion of (1+h)^3 at codimension 2") {
    const PencilGeometry geom = g(2, 2, 0, 0);
    const ChowClass one_plus_h =
        ChowClass::constant(geom, Rational(1)) + ChowClass::hyperplane(geom);
    const ChowClass cubed = one_plus_h.pow(3);
    CHECK(cubed.component(2) == Rational(3) * ChowClass::hyperplane(geom).pow(2));
}

TEST_CASE("integration against the Segre convention") {
    const PencilGeometry geom = g(2, 3, 4, 7);
    const ChowClass h = ChowClass::hyperplane(geom);
    CHECK(integrate(ChowClass::curve_m(geom) * h.pow(2)) == Rational(7));
    CHECK(integrate(h.pow(3)) == Rational(-4));
    CHECK(integrate(h.pow(2)) == Rational(0));
}

TEST_CASE("pencil first Chern class") {
    const PencilGeometry geom = g(1, 2, 3, 5);
    const ChowClass c1l = c1_of_pencil(geom);
    CHECK(c1l == Rational(2) * ChowClass::hyperplane(geom) + ChowClass::curve_m(geom));
    CHECK(c1l.component(0).is_zero());
    CHECK(integrate(c1l * ChowClass::curve_m(geom)) == Rational(10));
}

TEST_CASE("relative cotangent Chern class") {
    SUBCASE("N=1: c1 = -2h - e and the top component cancels") {
        const PencilGeometry geom = g(1, 2, 3, 5);
        const ChowClass c = chern_relative_cotangent(geom);
        CHECK(c.component(1) ==
              Rational(-2) * ChowClass::hyperplane(geom) - ChowClass::curve_e(geom));
        CHECK(c.component(2).is_zero());
    }
    SUBCASE("codimension-1 part is -(N+1)h - e, and c_(N+1) vanishes") {
        for (int N = 1; N <= 5; ++N) {
            const PencilGeometry geom = g(N, 3, -1, 2);
            const ChowClass c = chern_relative_cotangent(geom);
            CHECK(c.component(1) == Rational(-(N + 1)) * ChowClass::hyperplane(geom) -
                                        ChowClass::curve_e(geom));
            CHECK(c.component(N + 1).is_zero());
            CHECK(c.component(0) == ChowClass::constant(geom, Rational(1)));
        }
    }
}

TEST_CASE("critical cycle: three routes, frozen integrals") {
    for (int N = 1; N <= 4; ++N) {
        for (int d = 2; d <= 5; ++d) {
            const PencilGeometry geom = g(N, d, 1, -2);
            const ChowClass a = critical_cycle_from_series(geom);
            const ChowClass b = critical_cycle_from_chern_sum(geom);
            const ChowClass c = critical_cycle_closed(geom);
            CHECK(a == b);
            CHECK(a == c);
        }
    }
    CHECK(integrate(critical_cycle_closed(g(1, 2, 0, 0))) == Rational(0));
    // (N+1)(d-1)^N ht_int = 3 * 4 * 1
    CHECK(integrate(critical_cycle_closed(g(2, 3, 1, 2))) == Rational(12));
}

TEST_CASE("c1(L) c_N(Omega): product vs closed form") {
    SUBCASE("N=1 by hand: (dh+m)(-2h-e) = (de-2m) h") {
        for (int d = 2; d <= 6; ++d) {
            const PencilGeometry geom = g(1, d, 3, 5);
            const ChowClass direct = c1l_cn_product(geom);
            CHECK(direct.m_part(2) == Rational(-2));
            CHECK(direct.e_part(2) == Rational(d));
            CHECK(direct == c1l_cn_closed(geom));
        }
    }
    SUBCASE("pushforward matches the signed height multiple") {
        for (int N = 1; N <= 4; ++N) {
            for (int d = 2; d <= 5; ++d) {
                const PencilGeometry geom = g(N, d, 2, -1);
                CHECK(c1l_cn_product(geom) == c1l_cn_closed(geom));
                CHECK(integrate(c1l_cn_product(geom)) ==
                      Rational(alt_sign(N)) * Rational(N + 1) * intersection_height(geom));
            }
        }
    }
}

TEST_CASE("quotient class: product vs closed form") {
    for (int N = 1; N <= 4; ++N) {
        for (int d = 2; d <= 5; ++d) {
            const PencilGeometry geom = g(N, d, -2, 3);
            CHECK(quotient_class_product(geom) == quotient_class_closed(geom));
        }
    }
    const QuotientCoeffs q12 = quotient_coeffs(1, 2);
    CHECK(q12.a == Rational(0));
    CHECK(q12.b == Rational(-2));
    CHECK(q12.c == Rational(2));
    const QuotientCoeffs q23 = quotient_coeffs(2, 3);
    CHECK(q23.a == Rational(-9));
    CHECK(q23.b == Rational(-9));
    CHECK(q23.c == Rational(0));
}

TEST_CASE("exactly one cotangent twist sign satisfies the closed forms") {
    bool plus_failed = false;
    for (int N = 1; N <= 3 && !plus_failed; ++N) {
        for (int d = 2; d <= 4 && !plus_failed; ++d) {
            const PencilGeometry geom = g(N, d, 1, 1);
            CHECK(c1l_cn_product(geom, -1) == c1l_cn_closed(geom));
            if (c1l_cn_product(geom, +1) != c1l_cn_closed(geom)) plus_failed = true;
        }
    }
    CHECK(plus_failed);
}

TEST_CASE("intersection height") {
    CHECK(intersection_height(g(1, 2, 3, 5)) == Rational(2));
    CHECK(intersection_height(g(3, 4, 0, -7)) == Rational(-7));
    CHECK(intersection_height(g(2, 3, 1, 2)) == Rational(1));
    CHECK(intersection_height(g(2, 3, 2, 1)) == Rational(Integer(-1), Integer(1)));
    CHECK_THROWS_AS(g(0, 2, 0, 0), std::domain_error);
    CHECK_THROWS_AS(g(1, 1, 0, 0), std::domain_error);
}
