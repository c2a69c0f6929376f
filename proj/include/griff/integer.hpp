// Arbitrary-precision signed integers in sign-magnitude form.
//
// Magnitudes are little-endian vectors of 32-bit limbs with no leading zero
// limb; the value zero has an empty magnitude and sign 0. All operations are
// exact. Values are immutable in practice: every operation returns a fresh
// Integer, so instances can be shared freely across threads.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace griff {

class Integer {
public:
    Integer() = default;
    Integer(long long v);

    static Integer from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    int signum() const { return sign_; }

    Integer abs() const;
    Integer negated() const;

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);
    // Quotient truncated toward zero, as for built-in integers.
    friend Integer operator/(const Integer& a, const Integer& b);
    friend Integer operator%(const Integer& a, const Integer& b);
    Integer operator-() const { return negated(); }

    Integer& operator+=(const Integer& b) { *this = *this + b; return *this; }
    Integer& operator-=(const Integer& b) { *this = *this - b; return *this; }
    Integer& operator*=(const Integer& b) { *this = *this * b; return *this; }

    // (quotient, remainder) with a = q*b + r, |r| < |b|, sign(r) = sign(a).
    static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b);

    static Integer gcd(Integer a, Integer b);
    static Integer lcm(const Integer& a, const Integer& b);
    static Integer pow(const Integer& base, unsigned long long exp);

    // Three-way comparison: -1, 0, +1.
    static int cmp(const Integer& a, const Integer& b);
    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }

    std::string to_string() const;

    bool fits_long_long() const;
    long long to_long_long() const;  // throws std::overflow_error if out of range

    // Approximate double value; used only for optional decimal rendering.
    double to_double() const;

    size_t limb_count() const { return mag_.size(); }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Binomial coefficient C(n, k); zero for k < 0 or k > n. Requires n >= 0.
Integer binomial(long long n, long long k);

// (-1)^k as an Integer, for alternating sums.
inline Integer alt_sign(long long k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace griff
