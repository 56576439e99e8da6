#include "zeta2k/zeta.hpp"

#include <cfloat>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeta2k/bernoulli.hpp"
#include "zeta2k/combinatorics.hpp"

namespace zeta2k {

ZetaEvenValue zeta_closed_form(unsigned k) {
    if (k == 0) throw std::invalid_argument("zeta_closed_form needs k >= 1");
    Rational b = bernoulli_number(2 * k);
    if (k % 2 == 0) b = -b;
    Rational q = b * Rational(BigInt(2).pow(2 * k), BigInt(2) * factorial(2 * k));
    return {k, std::move(q)};
}

BigInt clipped_odd_binomial_sum(unsigned k, unsigned j) {
    if (k == 0 || j > k - 1) {
        throw std::invalid_argument("clipped_odd_binomial_sum needs k >= 1 and 0 <= j <= k-1");
    }
    const long m = (static_cast<long>(k) - 1) / 2;
    const long lo = std::max(0L, static_cast<long>(j) - m);
    const long hi = std::min(static_cast<long>(j), m);
    BigInt sum(0);
    for (long i = lo; i <= hi; ++i) {
        sum = sum + binomial(2 * static_cast<long>(j) + 2, 2 * i + 1);
    }
    return sum;
}

Rational convolution_coeff(unsigned k, unsigned j) {
    if (k == 0) throw std::invalid_argument("convolution_coeff needs k >= 1");
    const unsigned jmax = 2 * ((k - 1) / 2);
    if (j > jmax) throw std::invalid_argument("convolution_coeff needs j <= 2*floor((k-1)/2)");
    BigInt kfact = factorial(k);
    Rational out(BigInt(4) * kfact * kfact * clipped_odd_binomial_sum(k, j),
                 factorial(2 * static_cast<long>(j) + 2));
    return (j % 2 == 1) ? -out : out;
}

namespace {

std::mutex& inductive_mutex() {
    static std::mutex m;
    return m;
}

// memo[k] = q_k; index 0 is an unused placeholder
std::vector<Rational>& inductive_memo() {
    static std::vector<Rational> memo{Rational(0)};
    return memo;
}

}  // namespace

ZetaEvenValue zeta_inductive(unsigned k) {
    if (k == 0) throw std::invalid_argument("zeta_inductive needs k >= 1");
    std::lock_guard<std::mutex> lock(inductive_mutex());
    auto& memo = inductive_memo();
    while (memo.size() <= k) {
        const unsigned kk = static_cast<unsigned>(memo.size());
        Rational acc(BigInt(2), BigInt(2 * kk + 1));
        if (kk % 2 == 0) {
            // mean term: 2 * (1/(kk+1))^2
            acc -= Rational(BigInt(2), BigInt(kk + 1) * BigInt(kk + 1));
        }
        const unsigned jmax = 2 * ((kk - 1) / 2);
        for (unsigned j = 1; j <= jmax; ++j) {
            acc -= convolution_coeff(kk, j) * memo[kk - j];
        }
        BigInt kfact = factorial(kk);
        memo.push_back(acc / Rational(BigInt(4) * kfact * kfact));
    }
    return {k, memo[k]};
}

IdentityCheckResult zeta_cross_check(unsigned k) {
    return make_identity_check("zeta-inductive-vs-closed-form", "k=" + std::to_string(k),
                               zeta_inductive(k).q, zeta_closed_form(k).q);
}

DecimalValue zeta_decimal(unsigned k, int digits) {
    Rational q = zeta_closed_form(k).q;
    return pi_series_render(PiSeries::pi_even_power(static_cast<long>(k), q), digits);
}

DirectSeriesBracket zeta_direct_series(unsigned k, unsigned long terms) {
    if (k == 0 || terms == 0) throw std::invalid_argument("zeta_direct_series needs k >= 1, terms >= 1");
    // ascending magnitude (descending n) with compensation: the computed sum
    // sits within 2 eps of the true partial sum
    double sum = 0.0, comp = 0.0;
    for (unsigned long n = terms; n >= 1; --n) {
        double term = std::pow(static_cast<double>(n), -2.0 * static_cast<double>(k));
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double integral_tail = std::pow(static_cast<double>(terms), 1.0 - 2.0 * static_cast<double>(k)) /
                           (2.0 * static_cast<double>(k) - 1.0);
    // 4 eps absorbs per-term pow rounding plus the compensated-sum residue;
    // the bound gets twice that so the nudged ends still enclose the limit
    DirectSeriesBracket out;
    out.partial_sum = sum * (1.0 - 4.0 * DBL_EPSILON);
    out.tail_bound = integral_tail + 8.0 * DBL_EPSILON * sum;
    return out;
}

}  // namespace zeta2k
