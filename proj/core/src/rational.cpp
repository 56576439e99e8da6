#include "zeta2k/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace zeta2k {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

void Rational::reduce() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view s) {
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_decimal(s));
    return Rational(BigInt::from_decimal(s.substr(0, slash)),
                    BigInt::from_decimal(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::inverse() const {
    if (num_.is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.is_negative()) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Rational Rational::pow(unsigned long e) const {
    // operand is already reduced, so the power is too
    Rational r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    BigInt g1 = gcd(den_, o.den_);
    if (g1.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        return *this;  // already coprime (Knuth 4.5.1)
    }
    BigInt b1 = den_ / g1;
    BigInt d1 = o.den_ / g1;
    BigInt t = num_ * d1 + o.num_ * b1;
    if (t.is_zero()) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    BigInt g2 = gcd(t, g1);
    num_ = t / g2;
    den_ = b1 * d1 * (g1 / g2);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (this == &o) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
    if (num_.is_zero() || o.num_.is_zero()) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    BigInt g1 = gcd(num_, o.den_);
    BigInt g2 = gcd(o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale so the integer quotient keeps ~80 significant bits, then divide
    std::ptrdiff_t shift = 80 - (static_cast<std::ptrdiff_t>(num_.bit_length()) -
                                 static_cast<std::ptrdiff_t>(den_.bit_length()));
    BigInt q;
    if (shift >= 0) {
        q = (num_ << static_cast<std::size_t>(shift)) / den_;
    } else {
        q = num_ / (den_ << static_cast<std::size_t>(-shift));
    }
    return std::ldexp(q.to_double(), -static_cast<int>(shift));
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

std::string to_decimal_string(const Rational& v, int digits) {
    if (digits < 0) throw std::invalid_argument("to_decimal_string: negative digit count");
    BigInt pow10 = BigInt(10).pow(static_cast<unsigned long>(digits));
    BigInt scaled = v.numerator().abs() * pow10;
    BigInt q, r;
    BigInt::divmod(scaled, v.denominator(), q, r);
    BigInt twice = r * BigInt(2);
    if (twice > v.denominator() || (twice == v.denominator() && !q.is_even())) {
        q += BigInt(1);
    }
    std::string body = q.to_string();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        out = body.substr(0, body.size() - static_cast<std::size_t>(digits)) + "." +
              body.substr(body.size() - static_cast<std::size_t>(digits));
    }
    if (v.is_negative() && !q.is_zero()) out.insert(0, 1, '-');
    return out;
}

}  // namespace zeta2k
