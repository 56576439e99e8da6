#pragma once

#include <cstddef>

#include "zeta2k/identity_check.hpp"
#include "zeta2k/rational.hpp"

namespace zeta2k {

// Shared table of Bernoulli numbers (B1 = -1/2 convention), grown on demand
// via the defining recurrence and guarded by a mutex so concurrent readers
// are safe.  The perturbation hook exists for fault-injection tests: it
// offsets the *returned* value of one index without touching the stored
// table, so clearing it restores correctness with no recompute.
class BernoulliTable {
public:
    static Rational value(std::size_t n);

    static void set_perturbation(std::size_t n, const Rational& delta);
    static void clear_perturbation();

private:
    static void ensure(std::size_t n);
};

inline Rational bernoulli_number(std::size_t n) { return BernoulliTable::value(n); }

// B_n(x) via the binomial expansion in ascending index, folded Horner-style
// so only one power of x is live at a time.
Rational bernoulli_poly_eval(std::size_t n, const Rational& x);

// sum over m < n of C(n,m)*B_m == 0, for n >= 2 (the defining recurrence).
IdentityCheckResult check_bernoulli_recurrence(std::size_t n);

// sum over m <= n of C(n,m)*2^m*B_m == 0, for odd n >= 3.
IdentityCheckResult check_bernoulli_two_power_sum(std::size_t n);

// B_n(1-x) == (-1)^n * B_n(x).
IdentityCheckResult check_bernoulli_reflection(std::size_t n, const Rational& x);

}  // namespace zeta2k
