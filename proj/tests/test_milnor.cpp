#include <doctest.h>

#include <stdexcept>

#include <random>

#include "griff/milnor.hpp"

using namespace griff;

namespace {

HomogeneousPoly cusp_like() {
    HomogeneousPoly F(2, 3);  // x^2 y
    F.add_term({2, 1}, Rational(1));
    return F;
}

}  // namespace

TEST_CASE("polynomial construction and validation") {
    const HomogeneousPoly F = fermat(2, 3);
    CHECK(F.terms().size() == 2);
    CHECK(F.degree() == 3);
    CHECK(fermat(1, 4).terms().size() == 1);
    CHECK(fermat(3, 2).terms().size() == 3);

    HomogeneousPoly G(2, 3);
    CHECK_THROWS_AS(G.add_term({1, 1}, Rational(1)), std::invalid_argument);   // degree 2 != 3
    CHECK_THROWS_AS(G.add_term({1, 1, 1}, Rational(1)), std::invalid_argument);  // wrong arity
    CHECK_THROWS_AS(G.add_term({4, -1}, Rational(1)), std::invalid_argument);  // negative exponent
    G.add_term({2, 1}, Rational(1));
    G.add_term({2, 1}, Rational(-1));
    CHECK(G.is_zero());  // cancelled terms are not stored
}

TEST_CASE("jacobian generators") {
    const auto gens = jacobian_generators(fermat(2, 3));
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].terms().at({2, 0}) == Rational(3));
    CHECK(gens[1].terms().at({0, 2}) == Rational(3));
    CHECK(gens[0].degree() == 2);

    const auto cusp_gens = jacobian_generators(cusp_like());
    CHECK(cusp_gens[0].terms().at({1, 1}) == Rational(2));  // d/dx x^2 y = 2xy
    CHECK(cusp_gens[1].terms().at({2, 0}) == Rational(1));  // d/dy x^2 y = x^2
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_of_degree(1, 5).size() == 1);
    CHECK(monomials_of_degree(2, 3).size() == 4);
    CHECK(monomials_of_degree(3, 4).size() == binomial(6, 2).to_long_long());
    CHECK(monomials_of_degree(4, 0).size() == 1);
}

TEST_CASE("matrix rank on hand examples") {
    auto I = [](long long v) { return Integer(v); };
    CHECK(matrix_rank({{I(1), I(0)}, {I(0), I(1)}}, 2) == 2);
    CHECK(matrix_rank({{I(0), I(0)}, {I(0), I(0)}}, 2) == 0);
    CHECK(matrix_rank({{I(1), I(2)}, {I(2), I(4)}}, 2) == 1);
    CHECK(matrix_rank({{I(2), I(3), I(5)}, {I(4), I(6), I(10)}, {I(1), I(1), I(1)}}, 3) == 2);
    CHECK(matrix_rank({{I(0), I(1)}, {I(1), I(0)}, {I(1), I(1)}}, 2) == 2);
}

TEST_CASE("graded quotient dimensions") {
    const GradedQuotientDims fermat23 = hilbert_dims(fermat(2, 3));
    CHECK(fermat23.socle_bound == 2);
    CHECK(fermat23.dims == std::vector<long long>{1, 2, 1, 0});

    const GradedQuotientDims univariate = hilbert_dims(fermat(1, 5));
    CHECK(univariate.dims == std::vector<long long>{1, 1, 1, 1, 0});

    const GradedQuotientDims bad = hilbert_dims(cusp_like());
    CHECK(bad.dims.back() > 0);  // y^k survives in every degree
}

TEST_CASE("Milnor numbers of Fermat forms") {
    CHECK(milnor_number(fermat(2, 3)).milnor_number == Integer(4));
    CHECK(milnor_number(fermat(3, 2)).milnor_number == Integer(1));
    CHECK(milnor_number(fermat(1, 5)).milnor_number == Integer(4));
    for (int N = 1; N <= 3; ++N) {
        for (int delta = 2; delta <= 4; ++delta) {
            const MilnorResult res = milnor_number(fermat(N, delta));
            REQUIRE(res.isolated);
            CHECK(res.milnor_number == Integer::pow(Integer(delta - 1), static_cast<unsigned>(N)));
        }
    }
}

TEST_CASE("two distinct points in P^1: F = xy") {
    HomogeneousPoly F(2, 2);
    F.add_term({1, 1}, Rational(1));
    const MilnorResult res = milnor_number(F);
    REQUIRE(res.isolated);
    CHECK(res.milnor_number == Integer(1));
    CHECK(is_smooth_cone(F));
}

TEST_CASE("non-isolated input is rejected") {
    const MilnorResult res = milnor_number(cusp_like());
    CHECK_FALSE(res.isolated);
    CHECK_FALSE(is_smooth_cone(cusp_like()));
}

TEST_CASE("scaling invariance") {
    const HomogeneousPoly F = fermat(2, 4);
    const MilnorResult base = milnor_number(F);
    const MilnorResult scaled = milnor_number(F.scaled(Rational(Integer(-3), Integer(7))));
    CHECK(base.milnor_number == scaled.milnor_number);
    CHECK(base.dims.dims == scaled.dims.dims);
}

TEST_CASE("Gorenstein symmetry of the Milnor algebra") {
    for (int N = 2; N <= 3; ++N) {
        for (int delta = 2; delta <= 4; ++delta) {
            const GradedQuotientDims dims = hilbert_dims(fermat(N, delta));
            for (int k = 0; k <= dims.socle_bound; ++k) {
                CHECK(dims.dims[static_cast<size_t>(k)] ==
                      dims.dims[static_cast<size_t>(dims.socle_bound - k)]);
            }
        }
    }
}

TEST_CASE("deformation invariance within smooth cones") {
    std::mt19937_64 rng(314159);
    int verified = 0;
    for (int trial = 0; trial < 12 && verified < 5; ++trial) {
        HomogeneousPoly F = fermat(2, 4);
        for (const ExponentVec& mu : monomials_of_degree(2, 4)) {
            if (rng() % 2 == 0) continue;
            F.add_term(mu, Rational(Integer(static_cast<long long>(rng() % 5) - 2),
                                    Integer(1 + static_cast<long long>(rng() % 3))));
        }
        const MilnorResult res = milnor_number(F);
        if (!res.isolated) continue;
        CHECK(res.milnor_number == Integer(9));
        ++verified;
    }
    CHECK(verified >= 5);
}
