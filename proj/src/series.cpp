#include "griff/series.hpp"

#include <stdexcept>

namespace griff {

FormalSeries::FormalSeries(int order) {
    if (order < 0) throw std::domain_error("FormalSeries: negative truncation order");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

FormalSeries::FormalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::domain_error("FormalSeries: empty coefficient list");
}

FormalSeries FormalSeries::one(int order) {
    FormalSeries f(order);
    f[0] = Rational(1);
    return f;
}

FormalSeries FormalSeries::one_plus(const Rational& c, int order) {
    FormalSeries f = one(order);
    if (order >= 1) f[1] = c;
    return f;
}

static void require_same_order(const FormalSeries& f, const FormalSeries& g) {
    if (f.order() != g.order()) throw std::domain_error("FormalSeries: truncation orders differ");
}

FormalSeries operator+(const FormalSeries& f, const FormalSeries& g) {
    require_same_order(f, g);
    FormalSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = f[k] + g[k];
    return r;
}

FormalSeries operator-(const FormalSeries& f, const FormalSeries& g) {
    require_same_order(f, g);
    FormalSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = f[k] - g[k];
    return r;
}

FormalSeries operator*(const FormalSeries& f, const FormalSeries& g) {
    require_same_order(f, g);
    FormalSeries r(f.order());
    for (int i = 0; i <= f.order(); ++i) {
        if (f[i].is_zero()) continue;
        for (int j = 0; i + j <= f.order(); ++j) {
            if (g[j].is_zero()) continue;
            r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

bool operator==(const FormalSeries& f, const FormalSeries& g) {
    if (f.order() != g.order()) return false;
    for (int k = 0; k <= f.order(); ++k) {
        if (f[k] != g[k]) return false;
    }
    return true;
}

FormalSeries FormalSeries::inverse() const {
    if (coeffs_[0].is_zero()) throw std::domain_error("FormalSeries: inverse needs a unit constant term");
    FormalSeries g(order());
    g[0] = coeffs_[0].reciprocal();
    for (int k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += coeffs_[static_cast<size_t>(j)] * g[k - j];
        g[k] = -acc / coeffs_[0];
    }
    return g;
}

FormalSeries FormalSeries::pow(unsigned k) const {
    FormalSeries result = one(order());
    FormalSeries acc = *this;
    while (k != 0) {
        if (k & 1u) result = result * acc;
        k >>= 1;
        if (k != 0) acc = acc * acc;
    }
    return result;
}

Rational series_fraction_coeff(long long n, long long p, const Rational& a) {
    if (n < 0) throw std::domain_error("series_fraction_coeff: n must be nonnegative");
    if (p < 0) return Rational(0);
    const int order = static_cast<int>(p);
    FormalSeries numer = FormalSeries::one_plus(Rational(1), order).pow(static_cast<unsigned>(n));
    FormalSeries denom = FormalSeries::one_plus(a, order);
    return (numer * denom.inverse())[order];
}

Rational coeff_bruteforce(long long n, long long r, const Rational& a) {
    if (r < 0 || r > n) throw std::domain_error("coeff_bruteforce: r out of range");
    return series_fraction_coeff(n, n - r, a);
}

Rational coeff_closed_sum(long long n, long long r, const Rational& a) {
    if (r < 0 || r > n) throw std::domain_error("coeff_closed_sum: r out of range");
    Rational acc(0);
    for (long long k = r; k <= n; ++k) {
        acc += Rational(binomial(n, k)) * Rational(alt_sign(k)) * rat_pow(a, k - r);
    }
    return Rational(alt_sign(r)) * acc;
}

Rational coeff_closed_remainder(long long n, long long r, const Rational& a) {
    if (r < 0 || r > n) throw std::domain_error("coeff_closed_remainder: r out of range");
    if (a.is_zero()) throw std::domain_error("coeff_closed_remainder: a must be nonzero");
    Rational correction(0);
    for (long long k = 0; k < r; ++k) {
        correction += Rational(binomial(n, k)) * Rational(alt_sign(n - k)) * rat_pow(a, k);
    }
    Rational bracket = rat_pow(a - Rational(1), n) - correction;
    return Rational(alt_sign(n + r)) / rat_pow(a, r) * bracket;
}

}  // namespace griff
