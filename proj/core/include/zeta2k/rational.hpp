#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zeta2k/bigint.hpp"

namespace zeta2k {

// Exact rational number, always in lowest terms with a positive denominator.
// Zero is canonically 0/1, so default member equality is structural equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <std::integral T>
    Rational(T v) : num_(v), den_(1) {}

    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    // Accepts "p", "-p", "p/q"; whitespace is not allowed.
    static Rational parse(std::string_view s);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_negative() const noexcept { return num_.is_negative(); }
    bool is_integer() const noexcept { return den_.is_one(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }

    Rational operator-() const;
    Rational abs() const;
    Rational inverse() const;  // throws std::domain_error on zero
    Rational pow(unsigned long e) const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const noexcept = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;  // "p/q", or "p" when the denominator is 1
    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_;
    BigInt den_;

    void reduce();
};

// Decimal rendering with round-half-even at `digits` places after the point.
std::string to_decimal_string(const Rational& v, int digits);

}  // namespace zeta2k
