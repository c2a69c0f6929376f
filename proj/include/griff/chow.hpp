// The Chow ring of a projective bundle P(E) -> C for a rank-(N+1) bundle E on
// a smooth projective curve, together with the classes attached to a pencil of
// relative-degree-d hypersurfaces cut out by L = O_E(d) (x) pi^* M.
//
// Ring model. CH(P(E)) is free over CH(C) on 1, h, ..., h^N where
// h = c1(O_E(1)); CH(C) contributes 1 and the degree-1 classes e = c1(E),
// m = c1(M). Products of two curve classes vanish (CH^2 of a curve is zero),
// and the Grothendieck relation with c_{>=2}(E) = 0 reads
//
//     h^(N+1) + e h^N = 0,
//
// matching the Segre pushforward convention pi_* h^N = [C], pi_* h^(N+1) = -e.
// A class is stored per codimension p as a triple (a_p, b_p, c_p) meaning
// a_p h^p + b_p m h^(p-1) + c_p e h^(p-1), with the canonical form a_{N+1} = 0
// enforced after every operation (pure-h top terms fold into the e component).
// Canonical classes compare componentwise, so identity checks are exact.

#pragma once

#include <string>
#include <vector>

#include "griff/rational.hpp"

namespace griff {

// Numerical invariants of the pencil: fiber dimension N (so E has rank N+1),
// relative degree d of the hypersurface, and the degrees of e and m on C.
struct PencilGeometry {
    int N = 1;
    int d = 2;
    Integer deg_e;
    Integer deg_m;

    PencilGeometry() = default;
    PencilGeometry(int N_, int d_, Integer deg_e_, Integer deg_m_);

    friend bool operator==(const PencilGeometry& a, const PencilGeometry& b) {
        return a.N == b.N && a.d == b.d && a.deg_e == b.deg_e && a.deg_m == b.deg_m;
    }
    friend bool operator!=(const PencilGeometry& a, const PencilGeometry& b) { return !(a == b); }
};

class ChowClass {
public:
    explicit ChowClass(const PencilGeometry& geom);  // zero class

    static ChowClass constant(const PencilGeometry& geom, const Rational& q);
    static ChowClass hyperplane(const PencilGeometry& geom);  // h
    static ChowClass curve_m(const PencilGeometry& geom);     // m
    static ChowClass curve_e(const PencilGeometry& geom);     // e

    const PencilGeometry& geom() const { return geom_; }

    // Coefficient accessors for codimension p (0 <= p <= N+1).
    const Rational& h_part(int p) const { return h_.at(static_cast<size_t>(p)); }
    const Rational& m_part(int p) const { return m_.at(static_cast<size_t>(p)); }
    const Rational& e_part(int p) const { return e_.at(static_cast<size_t>(p)); }

    friend ChowClass operator+(const ChowClass& x, const ChowClass& y);
    friend ChowClass operator-(const ChowClass& x, const ChowClass& y);
    friend ChowClass operator*(const ChowClass& x, const ChowClass& y);
    ChowClass operator-() const;
    friend ChowClass operator*(const Rational& q, const ChowClass& x);

    ChowClass pow(unsigned k) const;

    // Inverse of a class with nonzero codimension-0 part; the positive-
    // codimension part is nilpotent, so the geometric series terminates.
    ChowClass inverse_unit() const;

    // Graded piece of codimension p.
    ChowClass component(int p) const;

    bool is_zero() const;
    friend bool operator==(const ChowClass& x, const ChowClass& y);
    friend bool operator!=(const ChowClass& x, const ChowClass& y) { return !(x == y); }

    std::string to_string() const;

private:
    PencilGeometry geom_;
    // Index p in 0..N+1; h_[p]*h^p + m_[p]*m h^(p-1) + e_[p]*e h^(p-1).
    std::vector<Rational> h_, m_, e_;

    void canonicalize();
    static void require_same_geom(const ChowClass& x, const ChowClass& y);
};

// Degree of the codimension-(N+1) part: b_{N+1} deg(m) + c_{N+1} deg(e).
// Lower-codimension parts contribute nothing.
Rational integrate(const ChowClass& x);

// c1(L) = d h + m for L = O_E(d) (x) pi^* M.
ChowClass c1_of_pencil(const PencilGeometry& geom);

// Total Chern class of the relative cotangent bundle Omega^1_{P(E)/C}:
// (1-h)^(N+1) + e_sign * e (1-h)^N. The bundle convention consistent with the
// Segre convention above has e_sign = -1; the +1 variant is kept callable so a
// dedicated check can demonstrate that exactly one sign satisfies the
// closed-form identities.
ChowClass chern_relative_cotangent(const PencilGeometry& geom, int e_sign = -1);

// The class of the critical locus of the pencil, each critical point counted
// with multiplicity (delta-1)^N, by three independent routes.
ChowClass critical_cycle_from_series(const PencilGeometry& geom, int e_sign = -1);     // [(1-c1L)^{-1} c(Omega)]^{(N+1)}
ChowClass critical_cycle_from_chern_sum(const PencilGeometry& geom, int e_sign = -1);  // sum_k c1L^{N+1-k} c_k(Omega)
ChowClass critical_cycle_closed(const PencilGeometry& geom);                           // (d-1)^N h^N [(d-1)h + (N+1)m - e]

// c1(L) c_N(Omega^1), as a product and in closed form.
ChowClass c1l_cn_product(const PencilGeometry& geom, int e_sign = -1);
ChowClass c1l_cn_closed(const PencilGeometry& geom);

// [(1-c1L)^{-1} c1(Omega) c(Omega)]^{(N+1)}, and the closed form
// h^N (a h + b m + c e) for given coefficients.
ChowClass quotient_class_product(const PencilGeometry& geom, int e_sign = -1);
ChowClass quotient_class_from_coeffs(const PencilGeometry& geom, const Rational& a,
                                     const Rational& b, const Rational& c);

// Intersection-theoretic height of the pencil: deg(m) - d/(N+1) deg(e).
Rational intersection_height(const PencilGeometry& geom);

}  // namespace griff
