#include "zeta2k/pi_approx.hpp"

#include <stdexcept>

namespace zeta2k {

namespace {

struct ArctanTerm {
    long scale;  // signed integer coefficient
    long m;      // argument is 1/m
};

// Exact partial sum of atan(1/m); stops once the first omitted term drops
// below `budget` and reports that term as the alternating-series tail bound.
Rational arctan_inv(long m, const Rational& budget, Rational& tail) {
    Rational sum;
    BigInt m2 = BigInt(m) * BigInt(m);
    BigInt mp(m);  // m^(2j+1)
    long odd = 1;
    int sign = 1;
    for (;;) {
        sum += Rational(BigInt(sign), BigInt(odd) * mp);
        mp *= m2;
        odd += 2;
        sign = -sign;
        Rational next(BigInt(1), BigInt(odd) * mp);
        if (next <= budget) {
            tail = next;
            return sum;
        }
    }
}

// Nearest grid point below/above resolved by round-half-even on the last digit.
Rational round_to_grid(const Rational& v, const BigInt& grid) {
    BigInt scaled = v.numerator() * grid;
    BigInt q, r;
    BigInt::divmod(scaled.abs(), v.denominator(), q, r);
    BigInt twice = r * BigInt(2);
    if (twice > v.denominator() || (twice == v.denominator() && !q.is_even())) q += BigInt(1);
    if (v.is_negative()) q = -q;
    return Rational(q, grid);
}

}  // namespace

PiApprox pi_approx(int digits, PiFormula formula) {
    if (digits < 1) throw std::invalid_argument("pi_approx: digits must be >= 1");
    const int prec = digits + 12;
    const BigInt grid = BigInt(10).pow(static_cast<unsigned long>(prec));

    const ArctanTerm machin[2] = {{16, 5}, {-4, 239}};
    const ArctanTerm hutton[2] = {{8, 3}, {4, 7}};
    const ArctanTerm* terms = formula == PiFormula::machin ? machin : hutton;

    // keep each component's contribution to the tail under 10^-(prec+1) / 2
    Rational sum;
    Rational tail_total;
    for (int i = 0; i < 2; ++i) {
        long c = terms[i].scale;
        long mag = c < 0 ? -c : c;
        Rational budget(BigInt(1), grid * BigInt(10) * BigInt(2 * mag));
        Rational tail;
        Rational part = arctan_inv(terms[i].m, budget, tail);
        sum += Rational(c) * part;
        tail_total += Rational(mag) * tail;
    }

    Rational value = round_to_grid(sum, grid);
    // rigorous enclosure: series tail plus half a grid step, well under 10^-digits
    PiApprox out;
    out.value = value;
    out.error = Rational(BigInt(1), BigInt(10).pow(static_cast<unsigned long>(digits)));
    out.digits = digits;
    return out;
}

std::string PiApprox::decimal() const { return to_decimal_string(value, digits); }

}  // namespace zeta2k
