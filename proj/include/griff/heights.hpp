// Closed-form coefficient evaluators and the two routes to the stable
// Griffiths height of a pencil of hypersurfaces with semihomogeneous
// singularities: a weight formula over the singular points, and an
// intersection-theoretic route through Chow-ring integrals. The two must agree
// exactly; keeping the routes independent is the whole point of this module.

#pragma once

#include <utility>
#include <vector>

#include "griff/chow.hpp"
#include "griff/rational.hpp"

namespace griff {

// Multiset of singular-point multiplicities: count points of multiplicity delta.
struct FiberEntry {
    int delta = 2;
    long long count = 1;
};

struct SingularFiberData {
    std::vector<FiberEntry> entries;

    // Throws std::domain_error unless every delta >= 2 and every count >= 1.
    void validate() const;
};

// Strict-normal-crossings stratification of one singular fiber: component
// multiplicities with the Euler characteristics of the open strata.
struct StratComponent {
    long long multiplicity = 1;
    Integer chi_open;
};

struct StratPair {
    long long multiplicity_i = 1;
    long long multiplicity_j = 1;
    Integer chi_open;
};

struct StratificationData {
    int N = 2;  // dimension of the total space of the degeneration
    std::vector<StratComponent> components;
    std::vector<StratPair> pairs;
};

// Per-point weight w(N, delta); lies in (1/12) Z and vanishes at delta = 1.
Rational height_weight(int N, int delta);

// Coefficients (a, b, c) of the closed form h^N (a h + b m + c e) for the
// quotient-class identity; all three are integers for every N >= 1, d >= 2.
struct QuotientCoeffs {
    Rational a, b, c;
};
QuotientCoeffs quotient_coeffs(int N, int d);

ChowClass quotient_class_closed(const PencilGeometry& geom);

// Blow-up comparison coefficients for the Chern classes of the relative
// logarithmic cotangent bundle, indexed by codimension r >= 1.
Rational alpha_coeff(int N, int r, int delta);
Rational beta_coeff(int N, int r, int delta);

// The product beta(N,1,delta) * beta(N,N-1,delta) and its Euler-characteristic
// closed form (1 - N/delta)((delta-1)^N + (-1)^(N+1)); the two agree. N >= 2.
std::pair<Rational, Rational> beta_product_pair(int N, int delta);

// Auxiliary per-point weights on the semistable cover; v = (-1)^N w.
Rational u_coeff(int N, int delta);           // factored display
Rational u_coeff_expanded(int N, int delta);  // two-term display, kept as a cross-check
Rational v_coeff(int N, int delta);

// Topological Euler characteristic of a smooth degree-delta hypersurface in
// projective n-space.
Rational chi_hypersurface(int n, int delta);

// Euler characteristic of the intersection of the exceptional divisor with the
// strict transform of the singular fiber; equals chi_hypersurface(N-1, delta).
Rational chi_exceptional(int N, int delta);

// Correction term of the height formula for one singular SNC fiber:
// (N-1)/4 sum (m_i - 1) chi_i + 1/12 sum (3 - m_i/m_j - m_j/m_i) chi_ij.
Rational snc_fiber_correction(const StratificationData& data);

// Euler-characteristic sum over the exceptional strata of the semistable
// cover; deg_sigma must be divisible by every delta in the fiber data.
Rational chi_sum_semistable_cover(int N, long long deg_sigma, const SingularFiberData& fibers);

// Both sides of the critical-point count identity
// sum count (delta-1)^N = (N+1)(d-1)^N ht_int, with the verdict.
struct CountCheck {
    Integer lhs;
    Rational rhs;
    bool feasible = false;
};
CountCheck critical_count_check(const PencilGeometry& geom, const SingularFiberData& fibers);

// Stable height via the weight formula:
// -(N+1) w(N,d) ht_int + sum count w(N,delta).
Rational stable_height_weight_formula(const PencilGeometry& geom, const SingularFiberData& fibers);

// Stable height via Chow-ring integrals:
// 1/12 int(quotient product) - 1/12 int(c1L cN product) + sum count w(N,delta).
// The integrals go through the ring, not the closed forms, so agreement with
// the weight formula is a genuine two-route check.
Rational stable_height_chow_integrals(const PencilGeometry& geom, const SingularFiberData& fibers);

// Slope of the stable height in ht_int when every singular point is an
// ordinary double point: (N+1)((d-1)^N w(N,2) - w(N,d)).
Rational nodal_height_slope(int N, int d);

struct HeightReport {
    Rational ht_int;
    Integer count_lhs;
    Rational count_rhs;
    bool feasible = false;
    Rational stable_height_weights;
    Rational stable_height_integrals;
    bool routes_agree = false;
};

HeightReport evaluate_height(const PencilGeometry& geom, const SingularFiberData& fibers);

}  // namespace griff
