// Exact rational numbers, kept in canonical form after every operation:
// gcd(|num|, den) = 1 and den > 0. Equality of canonical values is plain
// component equality, which is what every identity check in this project
// relies on.

#pragma once

#include <string>
#include <string_view>

#include "griff/integer.hpp"

namespace griff {

class Rational {
public:
    Rational() = default;
    Rational(long long v) : num_(v), den_(1) {}
    Rational(const Integer& v) : num_(v), den_(1) {}
    Rational(Integer num, Integer den);  // reduces; throws on zero denominator

    // Parses "p/q", "p", with optional sign; the serialization format used in
    // all JSON output.
    static Rational from_string(std::string_view s);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int signum() const { return num_.signum(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    static int cmp(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    Rational reciprocal() const;

    // "p/q" when q != 1, bare "p" otherwise.
    std::string to_string() const;

    // Approximate rendering with the given number of significant digits.
    std::string to_decimal_string(int significant_digits) const;

private:
    Integer num_;
    Integer den_ = Integer(1);

    void canonicalize();
};

// base^exp for integer exp; exp < 0 inverts (requires base != 0). 0^0 = 1.
Rational rat_pow(const Rational& base, long long exp);

}  // namespace griff
