#pragma once

#include "zeta2k/bigint.hpp"
#include "zeta2k/identity_check.hpp"
#include "zeta2k/pi_series.hpp"
#include "zeta2k/rational.hpp"

namespace zeta2k {

// zeta(2k) = q * pi^{2k} with q a positive rational in lowest terms.
struct ZetaEvenValue {
    unsigned k = 0;
    Rational q;
};

// Euler's closed form: q = (-1)^{k+1} * B_{2k} * 2^{2k} / (2 * (2k)!).
ZetaEvenValue zeta_closed_form(unsigned k);

// Independent route: replays the Parseval-based induction in pure rational
// arithmetic.  With m = floor((k-1)/2), even_flag = 1 for even k else 0,
// and alpha = even_flag/(k+1):
//   q_k = [ 2/(2k+1) - 2*alpha^2 - sum_{j=1}^{2m} conv(k,j) * q_{k-j} ]
//         / (4 * (k!)^2)
// where conv is convolution_coeff below and every q_{k-j} comes from this
// same recursion (memoized), never from the closed form or the Bernoulli
// table — the two routes share nothing but Rational itself.
ZetaEvenValue zeta_inductive(unsigned k);

// lhs = inductive q, rhs = closed-form q; the equality certifies the whole
// induction chain at this k.
IdentityCheckResult zeta_cross_check(unsigned k);

// Sum of C(2j+2, 2i+1) over the i for which both factors of the coefficient
// convolution exist: max(0, j-m) <= i <= min(j, m), m = floor((k-1)/2).
// Equals 2^{2j+1} while the limits are not clipped (j <= m), and 0 at
// j = k-1 for even k.  Requires 0 <= j <= k-1.
BigInt clipped_odd_binomial_sum(unsigned k, unsigned j);

// Coefficient of q_{k-j} in the induction step: the self-convolution of the
// closed-form coefficient list, which collapses to
//   4 * (-1)^j * (k!)^2 / (2j+2)! * clipped_odd_binomial_sum(k, j),
// an n-free value.  Requires 0 <= j <= 2*floor((k-1)/2).
Rational convolution_coeff(unsigned k, unsigned j);

// Decimal rendering of zeta(2k) with a rigorous error of one unit in the
// last printed digit.
DecimalValue zeta_decimal(unsigned k, int digits);

// Floating-point bracket from the Dirichlet series: partial_sum is nudged
// below the true sum of the first N terms, and tail_bound covers both the
// integral-test tail N^{1-2k}/(2k-1) and the accumulated rounding slack, so
// partial_sum <= zeta(2k) <= partial_sum + tail_bound holds in doubles.
struct DirectSeriesBracket {
    double partial_sum = 0.0;
    double tail_bound = 0.0;
};

DirectSeriesBracket zeta_direct_series(unsigned k, unsigned long terms);

}  // namespace zeta2k
