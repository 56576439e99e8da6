#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zeta2k {

// Arbitrary-precision signed integer, sign-magnitude over 64-bit limbs.
// The magnitude is little-endian with no high zero limbs; zero is sign 0
// with an empty limb vector, so default member equality is canonical.
class BigInt {
public:
    BigInt() noexcept = default;

    template <std::integral T>
    BigInt(T v) {
        if (v == 0) return;
        if constexpr (std::signed_integral<T>) {
            sign_ = v < 0 ? -1 : 1;
            // two's-complement safe for the most negative value
            std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                                    : static_cast<std::uint64_t>(v);
            mag_.push_back(m);
        } else {
            sign_ = 1;
            mag_.push_back(static_cast<std::uint64_t>(v));
        }
    }

    // Accepts an optional leading '-' followed by decimal digits.
    static BigInt from_decimal(std::string_view s);

    int signum() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    bool is_negative() const noexcept { return sign_ < 0; }
    bool is_one() const noexcept { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_even() const noexcept { return sign_ == 0 || (mag_[0] & 1u) == 0; }

    std::size_t bit_length() const noexcept;  // 0 for zero
    std::size_t limb_count() const noexcept { return mag_.size(); }

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    // Truncated division: q = trunc(u/v), r = u - q*v (r carries u's sign).
    // Throws std::domain_error when v is zero.
    static void divmod(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r);

    BigInt operator<<(std::size_t bits) const;
    BigInt operator>>(std::size_t bits) const;  // magnitude shift, truncates toward zero

    BigInt pow(unsigned long e) const;

    friend BigInt gcd(BigInt a, BigInt b);

    std::strong_ordering operator<=>(const BigInt& o) const noexcept;
    bool operator==(const BigInt& o) const noexcept = default;

    std::string to_string() const;
    double to_double() const noexcept;
    long long to_int64() const;  // throws std::overflow_error when out of range

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    int sign_ = 0;
    std::vector<std::uint64_t> mag_;

    void trim() noexcept;
    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) noexcept;
    BigInt(int sign, std::vector<std::uint64_t> mag) : sign_(sign), mag_(std::move(mag)) { trim(); }
    friend class Rational;
};

}  // namespace zeta2k
