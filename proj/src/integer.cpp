#include "griff/integer.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace griff {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

Integer::Integer(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid UB on LLONG_MIN: go through unsigned.
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

void Integer::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool Integer::is_one() const {
    return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
}

Integer Integer::abs() const {
    Integer r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

Integer Integer::negated() const {
    Integer r = *this;
    r.sign_ = -r.sign_;
    return r;
}

int Integer::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> Integer::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Requires |a| >= |b|.
std::vector<uint32_t> Integer::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - (i < b.size() ? static_cast<int64_t>(b[i]) : 0) - borrow;
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> Integer::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] = static_cast<uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

namespace {

std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, unsigned s) {
    if (s == 0 || a.empty()) return a;
    std::vector<uint32_t> r(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] |= a[i] << s;
        r[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, unsigned s) {
    if (s == 0 || a.empty()) return a;
    std::vector<uint32_t> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] >> s;
        if (i + 1 < a.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i + 1]) << (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace

// Knuth algorithm D on base-2^32 limbs, with single-limb short division as the
// small case. Inputs are magnitudes; b must be nonzero.
void Integer::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    const unsigned shift = std::countl_zero(b.back());
    std::vector<uint32_t> u = shl_bits(a, shift);
    std::vector<uint32_t> v = shl_bits(b, shift);
    const size_t n = v.size();
    const size_t m = u.size() >= n ? u.size() - n : 0;
    u.resize(std::max(u.size(), n + m) + 1, 0);
    q.assign(m + 1, 0);

    const uint64_t vtop = v[n - 1];
    const uint64_t vnext = v[n - 2];

    for (size_t j = m + 1; j-- > 0;) {
        uint64_t numer_hi = u[j + n];
        uint64_t numer = (numer_hi << 32) | u[j + n - 1];
        uint64_t qhat = numer / vtop;
        uint64_t rhat = numer % vtop;
        if (qhat >= kBase) {
            qhat = kBase - 1;
            rhat = numer - qhat * vtop;
        }
        while (rhat < kBase && qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }

        // Multiply-subtract qhat * v from u[j .. j+n].
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t d = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
            if (d < 0) {
                d += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(d);
        }
        int64_t d = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (d < 0) {
            // qhat was one too large: add v back.
            d += static_cast<int64_t>(kBase);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            d += static_cast<int64_t>(c2);
            d &= static_cast<int64_t>(kBase) - 1;
        }
        u[j + n] = static_cast<uint32_t>(d);
        q[j] = static_cast<uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    r = shr_bits(u, shift);
    // shr_bits returns its input untouched when shift == 0; the remainder can
    // still carry leading zero limbs from the multiply-subtract loop.
    while (!r.empty() && r.back() == 0) r.pop_back();
}

Integer operator+(const Integer& a, const Integer& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Integer r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = Integer::add_mag(a.mag_, b.mag_);
    } else {
        int c = Integer::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return Integer();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = Integer::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = Integer::sub_mag(b.mag_, a.mag_);
        }
    }
    return r;
}

Integer operator-(const Integer& a, const Integer& b) { return a + b.negated(); }

Integer operator*(const Integer& a, const Integer& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Integer();
    Integer r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = Integer::mul_mag(a.mag_, b.mag_);
    return r;
}

std::pair<Integer, Integer> Integer::divmod(const Integer& a, const Integer& b) {
    if (b.sign_ == 0) throw std::domain_error("Integer: division by zero");
    if (a.sign_ == 0) return {Integer(), Integer()};
    Integer q, r;
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return {q, r};
}

Integer operator/(const Integer& a, const Integer& b) { return Integer::divmod(a, b).first; }
Integer operator%(const Integer& a, const Integer& b) { return Integer::divmod(a, b).second; }

Integer Integer::gcd(Integer a, Integer b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer();
    return (a * b).abs() / gcd(a, b);
}

Integer Integer::pow(const Integer& base, unsigned long long exp) {
    Integer result(1);
    Integer acc = base;
    while (exp != 0) {
        if (exp & 1ull) result *= acc;
        exp >>= 1;
        if (exp != 0) acc *= acc;
    }
    return result;
}

int Integer::cmp(const Integer& a, const Integer& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::string Integer::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> chunks;  // base 10^9, little-endian
    std::vector<uint32_t> cur = mag_;
    const std::vector<uint32_t> ten9 = {1000000000u};
    while (!cur.empty()) {
        std::vector<uint32_t> q, r;
        divmod_mag(cur, ten9, q, r);
        chunks.push_back(r.empty() ? 0u : r[0]);
        cur = std::move(q);
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

Integer Integer::from_string(std::string_view s) {
    bool neg = false;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("Integer: empty numeral");
    Integer r;
    const Integer ten9(1000000000);
    while (pos < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - pos);
        uint32_t chunk = 0;
        Integer scale = take == 9 ? ten9 : Integer::pow(Integer(10), take);
        for (size_t i = 0; i < take; ++i, ++pos) {
            char c = s[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("Integer: bad digit in numeral");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
        }
        r = r * scale + Integer(static_cast<long long>(chunk));
    }
    if (neg) r = r.negated();
    return r;
}

bool Integer::fits_long_long() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t v = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return v <= 0x7fffffffffffffffull;
    return v <= 0x8000000000000000ull;
}

long long Integer::to_long_long() const {
    if (!fits_long_long()) throw std::overflow_error("Integer: value exceeds long long");
    if (sign_ == 0) return 0;
    uint64_t v = mag_[0];
    if (mag_.size() == 2) v |= static_cast<uint64_t>(mag_[1]) << 32;
    return sign_ > 0 ? static_cast<long long>(v) : -static_cast<long long>(v - 1) - 1;
}

double Integer::to_double() const {
    double v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

Integer binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Integer();
    if (k > n - k) k = n - k;
    // Multiplicative formula; each intermediate quotient is exact.
    Integer c(1);
    for (long long i = 1; i <= k; ++i) {
        c = c * Integer(n - k + i) / Integer(i);
    }
    return c;
}

}  // namespace griff
