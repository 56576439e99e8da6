#include "zeta2k/identities.hpp"

#include <stdexcept>
#include <string>

#include "zeta2k/bernoulli.hpp"
#include "zeta2k/combinatorics.hpp"

namespace zeta2k {

namespace {

// brute-force sum of B_{2t} * 2^{2t} * trinomial(2k+2; 2t, 2i+1, ...) over
// lo < i+t <= hi
Rational trinomial_weighted_sum(unsigned k, long lo, long hi) {
    Rational acc;
    for (long t = 0; t <= hi; ++t) {
        Rational weight = bernoulli_number(2 * static_cast<std::size_t>(t)) *
                          Rational(BigInt(2).pow(2 * static_cast<unsigned long>(t)));
        if (weight.is_zero()) continue;
        for (long i = std::max(0L, lo + 1 - t); i + t <= hi; ++i) {
            long n = 2 * static_cast<long>(k) + 2;
            BigInt tri = trinomial(n, 2 * t, 2 * i + 1, n - 2 * t - 2 * i - 1);
            acc += weight * Rational(tri);
        }
    }
    return acc;
}

Rational half_range_closed(unsigned k) {
    BigInt centered = binomial(2 * static_cast<long>(k), static_cast<long>(k));
    if (k % 2 == 1) centered = -centered;
    return Rational(BigInt(k + 1) * (BigInt(2).pow(2 * k) + centered));
}

Rational upper_range_closed(unsigned k) {
    BigInt centered = binomial(2 * static_cast<long>(k), static_cast<long>(k));
    if (k % 2 == 1) centered = -centered;
    return Rational(BigInt(k + 1) * (BigInt(2).pow(2 * k) - centered));
}

void require_k(unsigned k, const char* who) {
    if (k == 0) throw std::invalid_argument(std::string(who) + " needs k >= 1");
}

}  // namespace

IdentityCheckResult check_trinomial_half_range(unsigned k) {
    require_k(k, "check_trinomial_half_range");
    Rational lhs = trinomial_weighted_sum(k, -1, static_cast<long>(k) / 2);
    return make_identity_check("trinomial-half-range", "k=" + std::to_string(k), std::move(lhs),
                               half_range_closed(k));
}

IdentityCheckResult check_trinomial_full_range(unsigned k) {
    require_k(k, "check_trinomial_full_range");
    Rational lhs = trinomial_weighted_sum(k, -1, static_cast<long>(k));
    Rational rhs(BigInt(2).pow(2 * k + 1) * BigInt(k + 1));
    return make_identity_check("trinomial-full-range", "k=" + std::to_string(k), std::move(lhs),
                               std::move(rhs));
}

IdentityCheckResult check_trinomial_upper_range(unsigned k) {
    require_k(k, "check_trinomial_upper_range");
    Rational lhs = trinomial_weighted_sum(k, static_cast<long>(k) / 2, static_cast<long>(k));
    return make_identity_check("trinomial-upper-range", "k=" + std::to_string(k), std::move(lhs),
                               upper_range_closed(k));
}

IdentityCheckResult check_trinomial_additivity(unsigned k) {
    require_k(k, "check_trinomial_additivity");
    Rational lhs = trinomial_weighted_sum(k, -1, static_cast<long>(k));
    Rational rhs = half_range_closed(k) + upper_range_closed(k);
    return make_identity_check("trinomial-range-additivity", "k=" + std::to_string(k),
                               std::move(lhs), std::move(rhs));
}

IdentityCheckResult check_factorial_convolution(unsigned k) {
    require_k(k, "check_factorial_convolution");
    Rational acc;
    for (unsigned j = 1; j + 1 <= k; ++j) {
        acc += bernoulli_number(2 * (k - j)) *
               Rational(BigInt(1), factorial(2 * static_cast<long>(j) + 2) *
                                       factorial(2 * static_cast<long>(k - j)));
    }
    Rational lhs = Rational(BigInt(2) * factorial(2 * static_cast<long>(k))) * acc;
    Rational rhs = Rational(BigInt(2 * k), BigInt(2 * k + 1) * BigInt(2 * k + 2)) -
                   bernoulli_number(2 * k);
    return make_identity_check("factorial-convolution", "k=" + std::to_string(k), std::move(lhs),
                               std::move(rhs));
}

IdentityCheckResult check_clipped_convolution(unsigned k) {
    require_k(k, "check_clipped_convolution");
    const unsigned h = (k - 1) / 2;
    Rational acc;
    for (unsigned j = h + 1; j + 1 <= k; ++j) {
        BigInt clipped(0);
        for (unsigned i = 0; i + h + 1 <= j; ++i) {
            clipped = clipped + binomial(2 * static_cast<long>(j) + 2, 2 * static_cast<long>(i) + 1);
        }
        acc += bernoulli_number(2 * (k - j)) *
               Rational(clipped, BigInt(2).pow(2 * j) * factorial(2 * static_cast<long>(j) + 2) *
                                     factorial(2 * static_cast<long>(k - j)));
    }
    Rational lhs = Rational(BigInt(2) * factorial(2 * static_cast<long>(k))) * acc;

    BigInt centered = binomial(2 * static_cast<long>(k), static_cast<long>(k));
    if (k % 2 == 1) centered = -centered;
    BigInt bracket = BigInt(k + 1) * (BigInt(2).pow(2 * k) + centered) - BigInt(2).pow(2 * k);
    if (k % 2 == 0) {
        bracket = bracket - binomial(2 * static_cast<long>(k) + 1, static_cast<long>(k));
    }
    Rational rhs = Rational(BigInt(2) * bracket,
                            BigInt(2).pow(2 * k) * BigInt(2 * k + 1) * BigInt(2 * k + 2));
    return make_identity_check("clipped-convolution", "k=" + std::to_string(k), std::move(lhs),
                               std::move(rhs));
}

std::vector<IdentityCheckResult> run_all_identity_checks(unsigned k_max) {
    if (k_max == 0) throw std::invalid_argument("run_all_identity_checks needs k_max >= 1");
    std::vector<IdentityCheckResult> out;
    for (std::size_t n = 2; n <= 2 * static_cast<std::size_t>(k_max) + 2; ++n) {
        out.push_back(check_bernoulli_recurrence(n));
    }
    for (std::size_t n = 3; n <= 2 * static_cast<std::size_t>(k_max) + 1; n += 2) {
        out.push_back(check_bernoulli_two_power_sum(n));
    }
    const Rational points[] = {Rational(0), Rational(BigInt(1), BigInt(2)),
                               Rational(BigInt(1), BigInt(3)), Rational(BigInt(2), BigInt(5)),
                               Rational(-1)};
    const std::size_t reflect_max = std::min<std::size_t>(2 * static_cast<std::size_t>(k_max) + 2, 60);
    for (std::size_t n = 0; n <= reflect_max; ++n) {
        for (const auto& x : points) out.push_back(check_bernoulli_reflection(n, x));
    }
    for (unsigned k = 1; k <= k_max; ++k) {
        out.push_back(check_trinomial_half_range(k));
        out.push_back(check_trinomial_full_range(k));
        out.push_back(check_trinomial_upper_range(k));
        out.push_back(check_trinomial_additivity(k));
        out.push_back(check_factorial_convolution(k));
        out.push_back(check_clipped_convolution(k));
    }
    return out;
}

}  // namespace zeta2k
