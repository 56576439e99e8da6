#pragma once

namespace zeta2k {

// Floating-point witness that the spectral partial sums climb to the
// mean-square of x^k from below and land within the tail bound.
struct ParsevalReport {
    unsigned k = 0;
    unsigned long terms = 0;
    double partial_sum = 0.0;
    double target = 0.0;
    double gap = 0.0;         // target - partial_sum
    double tail_bound = 0.0;  // C^2/terms with C = sum of |gamma|*pi^{2l}
    bool pass = false;        // 0 <= gap <= tail_bound * (1 + 1e-9)
};

// 2*mean^2 + sum over n <= terms of (cosine_n^2 + sine_n^2), ascending n
// with compensated accumulation.  Coefficients for n <= 32 are evaluated
// exactly and only then rounded — the alternating closed form cancels
// heavily at small n and a pure float evaluation would poison the gap.
// The result is nudged down by 4 eps so it never overshoots the target.
double parseval_partial_sum(unsigned k, unsigned long terms);

// float(2*pi^{2k}/(2k+1)), the mean-square of x^k over one period
double parseval_target(unsigned k);

// C_k^2/terms, where C_k bounds every |coefficient|*n: loose but rigorous
double parseval_tail_bound(unsigned k, unsigned long terms);

ParsevalReport parseval_report(unsigned k, unsigned long terms);

}  // namespace zeta2k
