#pragma once

#include <map>
#include <string>

#include "zeta2k/rational.hpp"

namespace zeta2k {

// Finite sum of rational multiples of even powers of pi:
//   sum over l of q_l * pi^(2l),
// keyed by the half-exponent l >= 0. Zero coefficients are never stored,
// so equal values compare equal member-wise.
class PiSeries {
public:
    PiSeries() = default;

    static PiSeries constant(Rational q);
    // coeff * pi^(2l)
    static PiSeries pi_even_power(long l, Rational coeff = Rational(1));

    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(long l) const;  // 0 when absent
    long max_half_exponent() const noexcept;  // -1 for the zero series
    const std::map<long, Rational>& terms() const noexcept { return terms_; }

    PiSeries operator-() const;
    PiSeries& operator+=(const PiSeries& o);
    PiSeries& operator-=(const PiSeries& o);
    PiSeries& operator*=(const PiSeries& o);
    PiSeries& scale(const Rational& q);

    friend PiSeries operator+(PiSeries a, const PiSeries& b) { return a += b; }
    friend PiSeries operator-(PiSeries a, const PiSeries& b) { return a -= b; }
    friend PiSeries operator*(PiSeries a, const PiSeries& b) { return a *= b; }

    bool operator==(const PiSeries& o) const = default;

    // "q0 + q1*pi^2 + q2*pi^4 + ...", skipping zero terms; "0" for empty
    std::string to_string() const;

private:
    std::map<long, Rational> terms_;

    void set(long l, Rational q);
};

// Rational midpoint with a rigorous absolute error bound:
// the represented real lies in [value - error, value + error].
struct BoundedValue {
    Rational value;
    Rational error;
};

// Rendered decimal alongside the exact midpoint and bound.
struct DecimalValue {
    std::string text;
    Rational value;
    Rational error;
};

// Evaluates the series to a rational with |true - value| <= error <= 10^-digits.
BoundedValue pi_series_eval(const PiSeries& s, int digits);

// Same evaluation, rendered with round-half-even at `digits` places.
DecimalValue pi_series_render(const PiSeries& s, int digits);

}  // namespace zeta2k
