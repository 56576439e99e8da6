#pragma once

#include <vector>

#include "zeta2k/identity_check.hpp"

namespace zeta2k {

// Each check below brute-forces a weighted sum of trinomial coefficients
//   sum of B_{2t} * 2^{2t} * trinomial(2k+2; 2t, 2i+1, 2k-2t-2i+1)
// over a stated (i, t) range and compares it exactly against its closed
// form.  The evaluators use only bernoulli_number, binomial and trinomial —
// no closed form ever feeds its own verification.

// range i+t <= floor(k/2);  closed form (k+1) * (2^{2k} + (-1)^k * C(2k,k))
IdentityCheckResult check_trinomial_half_range(unsigned k);

// range i+t <= k;           closed form 2^{2k+1} * (k+1)
IdentityCheckResult check_trinomial_full_range(unsigned k);

// range floor(k/2) < i+t <= k;
//                           closed form (k+1) * (2^{2k} - (-1)^k * C(2k,k))
IdentityCheckResult check_trinomial_upper_range(unsigned k);

// the full-range brute sum must equal the half-range closed form plus the
// upper-range closed form — the subtraction step as a standalone identity
IdentityCheckResult check_trinomial_additivity(unsigned k);

// 2*(2k)! * sum_{j=1}^{k-1} B_{2k-2j} / ((2j+2)!*(2k-2j)!)
//   == 2k/((2k+1)(2k+2)) - B_{2k}          (empty sum at k = 1)
IdentityCheckResult check_factorial_convolution(unsigned k);

// 2*(2k)! * sum_{j=h+1}^{k-1} B_{2k-2j} * (sum_{i=0}^{j-h-1} C(2j+2, 2i+1))
//                            / (2^{2j}*(2j+2)!*(2k-2j)!)
//   == (2^{1-2k}/((2k+1)(2k+2)))
//      * [ (k+1)*(2^{2k} + (-1)^k*C(2k,k)) - (2^{2k} + C(2k+1,k)*e) ]
// with h = floor((k-1)/2) and e = 1 for even k, 0 for odd k.
IdentityCheckResult check_clipped_convolution(unsigned k);

// Runs every identity in the library over ranges scaled by k_max:
//   - Bernoulli recurrence for n = 2 .. 2*k_max+2
//   - Bernoulli two-power sum for odd n = 3 .. 2*k_max+1
//   - Bernoulli reflection for n <= min(2*k_max+2, 60) at five sample points
//   - the four trinomial checks for k = 1 .. k_max
//   - both convolution checks for k = 1 .. k_max
// Failures are collected, never thrown; ordering is deterministic.
std::vector<IdentityCheckResult> run_all_identity_checks(unsigned k_max);

}  // namespace zeta2k
