#pragma once

#include "zeta2k/bigint.hpp"

namespace zeta2k {

// n! for n >= 0; throws std::invalid_argument for negative n.
BigInt factorial(long n);

// C(n, r) for n >= 0; returns 0 when r < 0 or r > n.
// Lookups are memoized internally (thread-safe); callers never see the cache.
BigInt binomial(long n, long r);

// n! / (r1! r2! r3!) with r1 + r2 + r3 == n and all parts >= 0;
// throws std::invalid_argument otherwise.
BigInt trinomial(long n, long r1, long r2, long r3);

}  // namespace zeta2k
