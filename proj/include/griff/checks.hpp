// The identity sweeps: every cross-module identity the library claims is
// packaged as a named check that scans a parameter range and reports the first
// counterexample with exact left/right witnesses. The `verify` command and the
// acceptance suite both drive these with their own bounds.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "griff/scenario.hpp"

namespace griff {

struct CheckResult {
    std::string name;
    bool pass = false;
    long long cases = 0;
    std::string detail;  // first counterexample (exact witnesses), empty on pass
    double elapsed_ms = 0.0;
};

struct SweepBounds {
    int max_n = 4;
    int max_d = 5;
    int deg_range = 3;
    int threads = 1;
    int chern_e_sign = -1;  // hook for the sign-disambiguation check
};

// -- series / exact arithmetic --------------------------------------------
CheckResult check_series_three_route(int max_n, int a_lo, int a_hi, int threads);
CheckResult check_series_collapse_at_one(int max_n);
CheckResult check_series_inverse_roundtrip(int trials, int order, unsigned seed);
CheckResult check_exact_arith_properties(unsigned seed);

// -- Chow ring --------------------------------------------------------------
CheckResult check_ring_axioms(const SweepBounds& b, int trials, unsigned seed);
CheckResult check_ring_reduction(const SweepBounds& b);
CheckResult check_critical_cycle_three_route(const SweepBounds& b);
CheckResult check_chern_top_component_vanishes(const SweepBounds& b);
CheckResult check_c1l_cn_closed_form(const SweepBounds& b);
CheckResult check_quotient_closed_form(const SweepBounds& b);
CheckResult check_chern_sign_disambiguation(const SweepBounds& b);
CheckResult check_pushforward_identities(const SweepBounds& b);

// -- coefficient bookkeeping -------------------------------------------------
CheckResult check_weight_integrality(int max_n, int max_delta);
CheckResult check_v_matches_weight(int max_n, int max_delta);
CheckResult check_u_displays_agree(int max_n, int max_delta);
CheckResult check_beta_alpha_difference(int max_n, int max_delta);
CheckResult check_beta_product_identity(int max_n, int max_delta);

// -- Euler characteristics ----------------------------------------------------
CheckResult check_euler_two_routes(int max_n, int max_delta);
CheckResult check_snc_reduced_case(int trials, unsigned seed);
CheckResult check_chi_sum_recombination();

// -- heights -----------------------------------------------------------------
CheckResult check_nodal_slope(const SweepBounds& b);
CheckResult check_height_routes(int max_n, int max_d, int deg_abs, int max_delta,
                                long long per_geometry_cap, long long global_cap, int threads);

// -- Milnor oracle -------------------------------------------------------------
CheckResult check_milnor_fermat(const std::vector<std::pair<int, int>>& cases, int threads);
CheckResult check_milnor_nonisolated();
CheckResult check_milnor_perturbations(int count, unsigned seed, int threads);

// All scenarios with max_n, max_d, |deg| <= deg_abs whose fiber multisets
// (multiplicities up to max_delta) satisfy the critical-count identity, capped
// per geometry and globally; deterministic order.
std::vector<Scenario> enumerate_feasible_scenarios(int max_n, int max_d, int deg_abs, int max_delta,
                                                   long long per_geometry_cap, long long global_cap);

// The full battery with bounds derived from b, in a fixed order.
std::vector<CheckResult> run_verification_checks(const SweepBounds& b);

}  // namespace griff
