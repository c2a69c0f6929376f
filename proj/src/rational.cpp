#include "griff/rational.hpp"

#include <stdexcept>

namespace griff {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (den_.is_negative()) {
        num_ = num_.negated();
        den_ = den_.negated();
    }
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    Integer g = Integer::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = r.num_.negated();
    return r;
}

int Rational::cmp(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    return Integer::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Integer::from_string(s));
    }
    Integer num = Integer::from_string(s.substr(0, slash));
    Integer den = Integer::from_string(s.substr(slash + 1));
    return Rational(num, den);
}

std::string Rational::to_decimal_string(int significant_digits) const {
    int sig = significant_digits < 1 ? 1 : significant_digits;
    if (is_zero()) return "0";
    const Integer ten(10);
    Integer n = num_.abs();
    int dn = static_cast<int>(n.to_string().size());
    int dd = static_cast<int>(den_.to_string().size());
    // Scale so the truncated quotient always carries at least sig+1 digits.
    int k = sig + 1 + std::max(0, dd - dn + 1);
    Integer t = n * Integer::pow(ten, static_cast<unsigned long long>(k)) / den_;
    std::string ts = t.to_string();
    int exponent = static_cast<int>(ts.size()) - 1 - k;
    std::string mant = ts.substr(0, static_cast<size_t>(sig));
    if (static_cast<int>(ts.size()) > sig && ts[static_cast<size_t>(sig)] >= '5') {
        int i = sig - 1;
        while (i >= 0 && mant[static_cast<size_t>(i)] == '9') mant[static_cast<size_t>(i--)] = '0';
        if (i < 0) {
            mant = "1" + mant.substr(0, static_cast<size_t>(sig - 1));
            ++exponent;
        } else {
            ++mant[static_cast<size_t>(i)];
        }
    }
    std::string out = num_.is_negative() ? "-" : "";
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exponent);
    return out;
}

Rational rat_pow(const Rational& base, long long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base.is_zero()) throw std::domain_error("rat_pow: zero base with negative exponent");
        return rat_pow(base.reciprocal(), -exp);
    }
    return Rational(Integer::pow(base.num(), static_cast<unsigned long long>(exp)),
                    Integer::pow(base.den(), static_cast<unsigned long long>(exp)));
}

}  // namespace griff
