// Truncated formal power series over Q, and the three routes to the
// coefficient of y^(n-r) in (1+y)^n / (1+a*y): explicit expansion and two
// closed forms. The closed forms must agree with the expansion wherever they
// are defined; the sweep checks assert this exactly.

#pragma once

#include <vector>

#include "griff/rational.hpp"

namespace griff {

class FormalSeries {
public:
    // Zero series of the given truncation order (inclusive).
    explicit FormalSeries(int order);
    explicit FormalSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    Rational& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }

    static FormalSeries one(int order);
    // 1 + c*y, truncated.
    static FormalSeries one_plus(const Rational& c, int order);

    friend FormalSeries operator+(const FormalSeries& f, const FormalSeries& g);
    friend FormalSeries operator-(const FormalSeries& f, const FormalSeries& g);
    // Cauchy product truncated at the common order; orders must match.
    friend FormalSeries operator*(const FormalSeries& f, const FormalSeries& g);
    friend bool operator==(const FormalSeries& f, const FormalSeries& g);

    // Multiplicative inverse up to the truncation order; requires a nonzero
    // constant term.
    FormalSeries inverse() const;

    FormalSeries pow(unsigned k) const;

private:
    std::vector<Rational> coeffs_;
};

// Coefficient of y^p in (1+y)^n / (1+a*y), by truncated expansion.
// Total in p >= 0 (returns 0 for p < 0); n >= 0.
Rational series_fraction_coeff(long long n, long long p, const Rational& a);

// The same coefficient at p = n - r, brute force. Requires 0 <= r <= n.
Rational coeff_bruteforce(long long n, long long r, const Rational& a);

// Closed form (-1)^r * sum_{k=r}^{n} C(n,k) (-1)^k a^(k-r). Requires 0 <= r <= n.
Rational coeff_closed_sum(long long n, long long r, const Rational& a);

// Closed form (-1)^(n+r)/a^r * [ (a-1)^n - sum_{k=0}^{r-1} C(n,k) (-1)^(n-k) a^k ].
// Requires 0 <= r <= n and a != 0.
Rational coeff_closed_remainder(long long n, long long r, const Rational& a);

}  // namespace griff
