#pragma once

#include <string>

#include "zeta2k/rational.hpp"

namespace zeta2k {

// Arctangent combinations used to pin pi down by exact rational arithmetic.
// machin:  pi = 16*atan(1/5) - 4*atan(1/239)
// hutton:  pi =  8*atan(1/3) + 4*atan(1/7)
// The second formula exists purely as a cross-check on the first.
enum class PiFormula { machin, hutton };

// Rational enclosure of pi: |pi - value| <= error, with error = 10^-digits.
// `value` sits on the 10^-(digits+12) grid, so successive refinements nest.
struct PiApprox {
    Rational value;
    Rational error;
    int digits = 0;

    std::string decimal() const;  // round-half-even rendering at `digits`
};

// Partial sums of the arctangent series with the alternating-series tail
// bound; the tail plus grid rounding is kept below 10^-(digits+11).
PiApprox pi_approx(int digits, PiFormula formula = PiFormula::machin);

}  // namespace zeta2k
