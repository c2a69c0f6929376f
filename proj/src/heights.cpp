#include "griff/heights.hpp"

#include <stdexcept>

#include "griff/series.hpp"

namespace griff {

void SingularFiberData::validate() const {
    for (const FiberEntry& f : entries) {
        if (f.delta < 2) throw std::domain_error("SingularFiberData: multiplicity delta must be >= 2");
        if (f.count < 1) throw std::domain_error("SingularFiberData: count must be >= 1");
    }
}

Rational height_weight(int N, int delta) {
    if (N < 1 || delta < 1) throw std::domain_error("height_weight: need N >= 1 and delta >= 1");
    const Rational dm1(delta - 1);
    const Rational bracket = Rational(static_cast<long long>(N) * delta + 1) * rat_pow(dm1, N - 1) +
                             Rational(alt_sign(N)) * Rational(delta + 1);
    return dm1 * bracket / Rational(12ll * delta * delta);
}

QuotientCoeffs quotient_coeffs(int N, int d) {
    if (N < 1 || d < 2) throw std::domain_error("quotient_coeffs: need N >= 1 and d >= 2");
    const Rational dm1(d - 1);
    const Rational n1(N + 1);
    QuotientCoeffs q;
    q.a = n1 / Rational(d) * (-rat_pow(dm1, N + 1) + Rational(alt_sign(N + 1)));
    q.b = n1 / Rational(static_cast<long long>(d) * d) *
          (-rat_pow(dm1, N) * Rational(static_cast<long long>(d) * N + 1) + Rational(alt_sign(N)));
    q.c = Rational(1) / Rational(d) *
          (-rat_pow(dm1, N) * Rational(d - N - 2) + Rational(alt_sign(N + 1)) * Rational(N + 2));
    return q;
}

ChowClass quotient_class_closed(const PencilGeometry& geom) {
    const QuotientCoeffs q = quotient_coeffs(geom.N, geom.d);
    return quotient_class_from_coeffs(geom, q.a, q.b, q.c);
}

Rational alpha_coeff(int N, int r, int delta) {
    if (r < 1) throw std::domain_error("alpha_coeff: r must be >= 1");
    const Rational bracket = Rational(delta - 1) * Rational(binomial(N, r - 1)) -
                             Rational(static_cast<long long>(delta) * delta) *
                                 series_fraction_coeff(N, r - 2, Rational(delta));
    return Rational(alt_sign(r - 1)) * bracket;
}

Rational beta_coeff(int N, int r, int delta) {
    if (r < 1) throw std::domain_error("beta_coeff: r must be >= 1");
    const Rational bracket = Rational(binomial(N, r)) - Rational(delta) * Rational(binomial(N, r - 1)) +
                             Rational(static_cast<long long>(delta) * delta) *
                                 series_fraction_coeff(N, r - 2, Rational(delta));
    return Rational(alt_sign(r)) * bracket;
}

std::pair<Rational, Rational> beta_product_pair(int N, int delta) {
    if (N < 2) throw std::domain_error("beta_product_pair: need N >= 2");
    const Rational product = beta_coeff(N, 1, delta) * beta_coeff(N, N - 1, delta);
    const Rational closed = (Rational(1) - Rational(N) / Rational(delta)) *
                            (rat_pow(Rational(delta - 1), N) + Rational(alt_sign(N + 1)));
    return {product, closed};
}

Rational u_coeff(int N, int delta) {
    const Rational dm1(delta - 1);
    const Rational bracket =
        Rational(static_cast<long long>(N) * delta - static_cast<long long>(delta) * delta + 1) *
            rat_pow(dm1, N - 1) +
        Rational(alt_sign(N)) * Rational(delta + 1);
    return Rational(alt_sign(N)) * dm1 / Rational(12ll * delta * delta) * bracket;
}

Rational u_coeff_expanded(int N, int delta) {
    const Rational dm1_pow = rat_pow(Rational(delta - 1), N);
    const Rational first = Rational(alt_sign(N - 1)) / Rational(12) *
                           (Rational(1) - Rational(N) / Rational(delta)) *
                           (dm1_pow + Rational(alt_sign(N + 1)));
    const Rational second = Rational(alt_sign(N)) / Rational(12ll * delta * delta) *
                            (dm1_pow + Rational(alt_sign(N)) * Rational(static_cast<long long>(N) * delta - 1));
    return first + second;
}

Rational v_coeff(int N, int delta) {
    return u_coeff(N, delta) + Rational(alt_sign(N)) * rat_pow(Rational(delta - 1), N) / Rational(12);
}

Rational chi_hypersurface(int n, int delta) {
    if (n < 1 || delta < 1) throw std::domain_error("chi_hypersurface: need n >= 1 and delta >= 1");
    return Rational(delta) * series_fraction_coeff(n + 1, n - 1, Rational(delta));
}

Rational chi_exceptional(int N, int delta) {
    if (N < 1 || delta < 1) throw std::domain_error("chi_exceptional: need N >= 1 and delta >= 1");
    const Rational bracket = rat_pow(Rational(delta - 1), N) +
                             Rational(alt_sign(N)) * Rational(static_cast<long long>(N) * delta - 1);
    return Rational(alt_sign(N)) / Rational(delta) * bracket;
}

Rational snc_fiber_correction(const StratificationData& data) {
    Rational acc(0);
    for (const StratComponent& comp : data.components) {
        if (comp.multiplicity < 1) throw std::domain_error("snc_fiber_correction: multiplicities must be positive");
        acc += Rational(data.N - 1) / Rational(4) * Rational(comp.multiplicity - 1) * Rational(comp.chi_open);
    }
    for (const StratPair& pair : data.pairs) {
        if (pair.multiplicity_i < 1 || pair.multiplicity_j < 1)
            throw std::domain_error("snc_fiber_correction: multiplicities must be positive");
        const Rational mi(pair.multiplicity_i);
        const Rational mj(pair.multiplicity_j);
        acc += Rational(1) / Rational(12) * (Rational(3) - mi / mj - mj / mi) * Rational(pair.chi_open);
    }
    return acc;
}

Rational chi_sum_semistable_cover(int N, long long deg_sigma, const SingularFiberData& fibers) {
    fibers.validate();
    if (deg_sigma < 1) throw std::domain_error("chi_sum_semistable_cover: deg_sigma must be positive");
    for (const FiberEntry& f : fibers.entries) {
        if (deg_sigma % f.delta != 0)
            throw std::domain_error("chi_sum_semistable_cover: deg_sigma must be divisible by every delta");
    }
    Rational acc(0);
    for (const FiberEntry& f : fibers.entries) {
        const Rational bracket = rat_pow(Rational(f.delta - 1), N) +
                                 Rational(alt_sign(N)) * Rational(static_cast<long long>(N) * f.delta - 1);
        acc += Rational(f.count) / Rational(static_cast<long long>(f.delta) * f.delta) * bracket;
    }
    return Rational(alt_sign(N)) * Rational(deg_sigma) * acc;
}

CountCheck critical_count_check(const PencilGeometry& geom, const SingularFiberData& fibers) {
    fibers.validate();
    CountCheck out;
    for (const FiberEntry& f : fibers.entries) {
        out.lhs += Integer(f.count) * Integer::pow(Integer(f.delta - 1), static_cast<unsigned>(geom.N));
    }
    out.rhs = Rational(geom.N + 1) * rat_pow(Rational(geom.d - 1), geom.N) * intersection_height(geom);
    out.feasible = Rational(out.lhs) == out.rhs;
    return out;
}

static Rational fiber_weight_sum(int N, const SingularFiberData& fibers) {
    Rational acc(0);
    for (const FiberEntry& f : fibers.entries) acc += Rational(f.count) * height_weight(N, f.delta);
    return acc;
}

Rational stable_height_weight_formula(const PencilGeometry& geom, const SingularFiberData& fibers) {
    fibers.validate();
    return -Rational(geom.N + 1) * height_weight(geom.N, geom.d) * intersection_height(geom) +
           fiber_weight_sum(geom.N, fibers);
}

Rational stable_height_chow_integrals(const PencilGeometry& geom, const SingularFiberData& fibers) {
    fibers.validate();
    const Rational twelfth = Rational(1) / Rational(12);
    return twelfth * integrate(quotient_class_product(geom)) -
           twelfth * integrate(c1l_cn_product(geom)) + fiber_weight_sum(geom.N, fibers);
}

Rational nodal_height_slope(int N, int d) {
    return Rational(N + 1) * (rat_pow(Rational(d - 1), N) * height_weight(N, 2) - height_weight(N, d));
}

HeightReport evaluate_height(const PencilGeometry& geom, const SingularFiberData& fibers) {
    HeightReport report;
    report.ht_int = intersection_height(geom);
    const CountCheck check = critical_count_check(geom, fibers);
    report.count_lhs = check.lhs;
    report.count_rhs = check.rhs;
    report.feasible = check.feasible;
    report.stable_height_weights = stable_height_weight_formula(geom, fibers);
    report.stable_height_integrals = stable_height_chow_integrals(geom, fibers);
    report.routes_agree = report.stable_height_weights == report.stable_height_integrals;
    return report;
}

}  // namespace griff
