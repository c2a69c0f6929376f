// Milnor number of a homogeneous isolated singularity, computed as the
// dimension of the Jacobian-ideal quotient algebra, degree by degree, with
// exact fraction-free rank computations over Q.
//
// For a homogeneous F of degree delta in N variables whose projective
// hypersurface (F = 0) is smooth, the quotient Q[x]/(dF/dx_1, ..., dF/dx_N) is
// Artinian with top degree N(delta-2) and total dimension (delta-1)^N. If the
// quotient is still nonzero one degree past that bound it is infinite-
// dimensional, which certifies that the cone singularity is not isolated (the
// projective tangent cone is singular).

#pragma once

#include <map>
#include <vector>

#include "griff/integer.hpp"
#include "griff/rational.hpp"

namespace griff {

using ExponentVec = std::vector<int>;

class HomogeneousPoly {
public:
    HomogeneousPoly(int num_vars, int degree);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    const std::map<ExponentVec, Rational>& terms() const { return terms_; }

    // Adds coeff * x^exponents; zero results are erased. Throws if the
    // exponent vector has the wrong length, a negative entry, or a total
    // degree different from degree().
    void add_term(const ExponentVec& exponents, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }

    HomogeneousPoly scaled(const Rational& factor) const;
    std::string to_string() const;

private:
    int num_vars_;
    int degree_;
    std::map<ExponentVec, Rational> terms_;
};

// x_1^delta + ... + x_N^delta.
HomogeneousPoly fermat(int num_vars, int delta);

// The tuple of partial derivatives, each homogeneous of degree delta-1
// (possibly zero).
std::vector<HomogeneousPoly> jacobian_generators(const HomogeneousPoly& F);

// All exponent vectors of total degree k in n variables, in lexicographic
// order; C(k+n-1, n-1) of them.
std::vector<ExponentVec> monomials_of_degree(int n, int k);

// Rank over Q of an integer matrix, by fraction-free Gaussian elimination.
long long matrix_rank(std::vector<std::vector<Integer>> rows, size_t cols);

struct GradedQuotientDims {
    // dims[k] for k = 0 .. socle_bound + 1.
    std::vector<long long> dims;
    int socle_bound = 0;  // N(delta-2)
};

// Dimensions of the graded pieces of Q[x]/Jacobian ideal, up to one degree
// past the socle bound. Per-degree ranks are independent; threads > 1 runs
// them through the OpenMP path.
GradedQuotientDims hilbert_dims(const HomogeneousPoly& F, int threads = 1);

struct MilnorResult {
    bool isolated = false;
    Integer milnor_number;  // meaningful only when isolated
    GradedQuotientDims dims;
};

MilnorResult milnor_number(const HomogeneousPoly& F, int threads = 1);

// True iff the singularity of the affine cone at the origin is isolated,
// i.e. the projective hypersurface (F = 0) is smooth.
bool is_smooth_cone(const HomogeneousPoly& F, int threads = 1);

}  // namespace griff
