#include "griff/chow.hpp"

#include <stdexcept>

namespace griff {

PencilGeometry::PencilGeometry(int N_, int d_, Integer deg_e_, Integer deg_m_)
    : N(N_), d(d_), deg_e(std::move(deg_e_)), deg_m(std::move(deg_m_)) {
    if (N < 1) throw std::domain_error("PencilGeometry: fiber dimension N must be >= 1");
    if (d < 2) throw std::domain_error("PencilGeometry: relative degree d must be >= 2");
}

ChowClass::ChowClass(const PencilGeometry& geom) : geom_(geom) {
    const size_t size = static_cast<size_t>(geom.N) + 2;
    h_.assign(size, Rational(0));
    m_.assign(size, Rational(0));
    e_.assign(size, Rational(0));
}

void ChowClass::canonicalize() {
    // Fold a h^(N+1) = -a e h^N into the e component of the top codimension.
    const size_t top = static_cast<size_t>(geom_.N) + 1;
    if (!h_[top].is_zero()) {
        e_[top] -= h_[top];
        h_[top] = Rational(0);
    }
}

ChowClass ChowClass::constant(const PencilGeometry& geom, const Rational& q) {
    ChowClass x(geom);
    x.h_[0] = q;
    return x;
}

ChowClass ChowClass::hyperplane(const PencilGeometry& geom) {
    ChowClass x(geom);
    x.h_[1] = Rational(1);
    return x;
}

ChowClass ChowClass::curve_m(const PencilGeometry& geom) {
    ChowClass x(geom);
    x.m_[1] = Rational(1);
    return x;
}

ChowClass ChowClass::curve_e(const PencilGeometry& geom) {
    ChowClass x(geom);
    x.e_[1] = Rational(1);
    return x;
}

void ChowClass::require_same_geom(const ChowClass& x, const ChowClass& y) {
    if (x.geom_ != y.geom_) throw std::domain_error("ChowClass: geometry mismatch");
}

ChowClass operator+(const ChowClass& x, const ChowClass& y) {
    ChowClass::require_same_geom(x, y);
    ChowClass r(x.geom_);
    for (size_t p = 0; p < r.h_.size(); ++p) {
        r.h_[p] = x.h_[p] + y.h_[p];
        r.m_[p] = x.m_[p] + y.m_[p];
        r.e_[p] = x.e_[p] + y.e_[p];
    }
    return r;
}

ChowClass operator-(const ChowClass& x, const ChowClass& y) {
    ChowClass::require_same_geom(x, y);
    ChowClass r(x.geom_);
    for (size_t p = 0; p < r.h_.size(); ++p) {
        r.h_[p] = x.h_[p] - y.h_[p];
        r.m_[p] = x.m_[p] - y.m_[p];
        r.e_[p] = x.e_[p] - y.e_[p];
    }
    return r;
}

ChowClass ChowClass::operator-() const {
    ChowClass r(geom_);
    for (size_t p = 0; p < h_.size(); ++p) {
        r.h_[p] = -h_[p];
        r.m_[p] = -m_[p];
        r.e_[p] = -e_[p];
    }
    return r;
}

ChowClass operator*(const Rational& q, const ChowClass& x) {
    ChowClass r(x.geom_);
    for (size_t p = 0; p < r.h_.size(); ++p) {
        r.h_[p] = q * x.h_[p];
        r.m_[p] = q * x.m_[p];
        r.e_[p] = q * x.e_[p];
    }
    return r;
}

ChowClass operator*(const ChowClass& x, const ChowClass& y) {
    ChowClass::require_same_geom(x, y);
    ChowClass r(x.geom_);
    const int top = x.geom_.N + 1;
    for (int p = 0; p <= top; ++p) {
        for (int q = 0; p + q <= top; ++q) {
            const int pq = p + q;
            // (a h^p + b m h^(p-1) + c e h^(p-1)) (a' h^q + b' m h^(q-1) + c' e h^(q-1));
            // cross terms between curve classes vanish.
            r.h_[pq] += x.h_[p] * y.h_[q];
            r.m_[pq] += x.h_[p] * y.m_[q] + x.m_[p] * y.h_[q];
            r.e_[pq] += x.h_[p] * y.e_[q] + x.e_[p] * y.h_[q];
        }
    }
    // Codimension > N+1 drops out entirely: h^(N+2) = e h^(N+1) = m h^(N+1) = 0.
    r.canonicalize();
    return r;
}

ChowClass ChowClass::pow(unsigned k) const {
    ChowClass result = constant(geom_, Rational(1));
    ChowClass acc = *this;
    while (k != 0) {
        if (k & 1u) result = result * acc;
        k >>= 1;
        if (k != 0) acc = acc * acc;
    }
    return result;
}

ChowClass ChowClass::inverse_unit() const {
    if (h_[0].is_zero()) throw std::domain_error("ChowClass: inverse needs a unit codimension-0 part");
    const Rational c0 = h_[0];
    // u = 1 - x/c0 has zero constant part, hence u^(N+2) = 0.
    ChowClass u = constant(geom_, Rational(1)) - c0.reciprocal() * *this;
    ChowClass acc = constant(geom_, Rational(1));
    ChowClass sum = acc;
    for (int k = 1; k <= geom_.N + 1; ++k) {
        acc = acc * u;
        sum = sum + acc;
    }
    return c0.reciprocal() * sum;
}

ChowClass ChowClass::component(int p) const {
    if (p < 0 || p > geom_.N + 1) throw std::domain_error("ChowClass: codimension out of range");
    ChowClass r(geom_);
    r.h_[static_cast<size_t>(p)] = h_[static_cast<size_t>(p)];
    r.m_[static_cast<size_t>(p)] = m_[static_cast<size_t>(p)];
    r.e_[static_cast<size_t>(p)] = e_[static_cast<size_t>(p)];
    return r;
}

bool ChowClass::is_zero() const {
    for (size_t p = 0; p < h_.size(); ++p) {
        if (!h_[p].is_zero() || !m_[p].is_zero() || !e_[p].is_zero()) return false;
    }
    return true;
}

bool operator==(const ChowClass& x, const ChowClass& y) {
    if (x.geom_ != y.geom_) return false;
    for (size_t p = 0; p < x.h_.size(); ++p) {
        if (x.h_[p] != y.h_[p] || x.m_[p] != y.m_[p] || x.e_[p] != y.e_[p]) return false;
    }
    return true;
}

std::string ChowClass::to_string() const {
    std::string out;
    auto append = [&out](const Rational& coeff, const std::string& monomial) {
        if (coeff.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += coeff.to_string();
        if (!monomial.empty()) out += "*" + monomial;
    };
    for (int p = 0; p <= geom_.N + 1; ++p) {
        std::string hp = p == 0 ? "" : (p == 1 ? "h" : "h^" + std::to_string(p));
        std::string hp1 = p <= 1 ? "" : (p == 2 ? "h" : "h^" + std::to_string(p - 1));
        append(h_part(p), hp);
        if (p >= 1) {
            append(m_part(p), hp1.empty() ? "m" : "m*" + hp1);
            append(e_part(p), hp1.empty() ? "e" : "e*" + hp1);
        }
    }
    return out.empty() ? "0" : out;
}

Rational integrate(const ChowClass& x) {
    const int top = x.geom().N + 1;
    return x.m_part(top) * Rational(x.geom().deg_m) + x.e_part(top) * Rational(x.geom().deg_e);
}

ChowClass c1_of_pencil(const PencilGeometry& geom) {
    return Rational(geom.d) * ChowClass::hyperplane(geom) + ChowClass::curve_m(geom);
}

ChowClass chern_relative_cotangent(const PencilGeometry& geom, int e_sign) {
    const ChowClass one = ChowClass::constant(geom, Rational(1));
    const ChowClass one_minus_h = one - ChowClass::hyperplane(geom);
    ChowClass base = one_minus_h.pow(static_cast<unsigned>(geom.N + 1));
    ChowClass twist = ChowClass::curve_e(geom) * one_minus_h.pow(static_cast<unsigned>(geom.N));
    return e_sign >= 0 ? base + twist : base - twist;
}

ChowClass critical_cycle_from_series(const PencilGeometry& geom, int e_sign) {
    const ChowClass one = ChowClass::constant(geom, Rational(1));
    const ChowClass inv = (one - c1_of_pencil(geom)).inverse_unit();
    return (inv * chern_relative_cotangent(geom, e_sign)).component(geom.N + 1);
}

ChowClass critical_cycle_from_chern_sum(const PencilGeometry& geom, int e_sign) {
    const ChowClass c1l = c1_of_pencil(geom);
    const ChowClass c_omega = chern_relative_cotangent(geom, e_sign);
    ChowClass acc(geom);
    for (int k = 0; k <= geom.N; ++k) {
        acc = acc + c1l.pow(static_cast<unsigned>(geom.N + 1 - k)) * c_omega.component(k);
    }
    return acc;
}

ChowClass critical_cycle_closed(const PencilGeometry& geom) {
    const Rational dm1_pow = rat_pow(Rational(geom.d - 1), geom.N);
    const ChowClass hN = ChowClass::hyperplane(geom).pow(static_cast<unsigned>(geom.N));
    const ChowClass bracket = Rational(geom.d - 1) * ChowClass::hyperplane(geom) +
                              Rational(geom.N + 1) * ChowClass::curve_m(geom) -
                              ChowClass::curve_e(geom);
    return dm1_pow * (hN * bracket);
}

ChowClass c1l_cn_product(const PencilGeometry& geom, int e_sign) {
    return c1_of_pencil(geom) * chern_relative_cotangent(geom, e_sign).component(geom.N);
}

ChowClass c1l_cn_closed(const PencilGeometry& geom) {
    const Rational sign(alt_sign(geom.N));
    const ChowClass hN = ChowClass::hyperplane(geom).pow(static_cast<unsigned>(geom.N));
    const ChowClass bracket =
        Rational(static_cast<long long>(geom.d) * (geom.N + 1)) * ChowClass::hyperplane(geom) +
        Rational(geom.N + 1) * ChowClass::curve_m(geom) +
        Rational(static_cast<long long>(geom.d) * geom.N) * ChowClass::curve_e(geom);
    return sign * (hN * bracket);
}

ChowClass quotient_class_product(const PencilGeometry& geom, int e_sign) {
    const ChowClass one = ChowClass::constant(geom, Rational(1));
    const ChowClass inv = (one - c1_of_pencil(geom)).inverse_unit();
    const ChowClass c_omega = chern_relative_cotangent(geom, e_sign);
    return (inv * c_omega.component(1) * c_omega).component(geom.N + 1);
}

ChowClass quotient_class_from_coeffs(const PencilGeometry& geom, const Rational& a,
                                     const Rational& b, const Rational& c) {
    const ChowClass hN = ChowClass::hyperplane(geom).pow(static_cast<unsigned>(geom.N));
    const ChowClass bracket = a * ChowClass::hyperplane(geom) + b * ChowClass::curve_m(geom) +
                              c * ChowClass::curve_e(geom);
    return hN * bracket;
}

Rational intersection_height(const PencilGeometry& geom) {
    return Rational(geom.deg_m) - Rational(geom.d) / Rational(geom.N + 1) * Rational(geom.deg_e);
}

}  // namespace griff
