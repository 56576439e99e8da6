#include "zeta2k/bernoulli.hpp"

#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zeta2k/combinatorics.hpp"

namespace zeta2k {

namespace {

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Rational>& table() {
    static std::vector<Rational> values;
    return values;
}

std::optional<std::pair<std::size_t, Rational>>& perturbation() {
    static std::optional<std::pair<std::size_t, Rational>> p;
    return p;
}

}  // namespace

void BernoulliTable::ensure(std::size_t n) {
    auto& values = table();
    if (values.empty()) {
        values.emplace_back(1);
        values.emplace_back(Rational(BigInt(-1), BigInt(2)));
    }
    while (values.size() <= n) {
        std::size_t m = values.size();
        if (m % 2 == 1) {
            values.emplace_back(0);
            continue;
        }
        // recurrence: sum over j <= m of C(m+1,j)*B_j == 0, and C(m+1,m) = m+1
        Rational acc;
        for (std::size_t j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;
            acc += Rational(binomial(m + 1, j)) * values[j];
        }
        values.push_back(-acc / Rational(static_cast<long long>(m + 1)));
    }
}

Rational BernoulliTable::value(std::size_t n) {
    std::lock_guard<std::mutex> lock(table_mutex());
    ensure(n);
    Rational v = table()[n];
    if (const auto& p = perturbation(); p && p->first == n) v += p->second;
    return v;
}

void BernoulliTable::set_perturbation(std::size_t n, const Rational& delta) {
    std::lock_guard<std::mutex> lock(table_mutex());
    perturbation() = {n, delta};
}

void BernoulliTable::clear_perturbation() {
    std::lock_guard<std::mutex> lock(table_mutex());
    perturbation().reset();
}

Rational bernoulli_poly_eval(std::size_t n, const Rational& x) {
    Rational acc;
    for (std::size_t l = 0; l <= n; ++l) {
        acc = acc * x + Rational(binomial(n, l)) * bernoulli_number(l);
    }
    return acc;
}

IdentityCheckResult check_bernoulli_recurrence(std::size_t n) {
    if (n < 2) throw std::invalid_argument("recurrence check needs n >= 2");
    Rational lhs;
    for (std::size_t m = 0; m < n; ++m) {
        lhs += Rational(binomial(n, m)) * bernoulli_number(m);
    }
    return make_identity_check("bernoulli-recurrence", "n=" + std::to_string(n),
                               std::move(lhs), Rational(0));
}

IdentityCheckResult check_bernoulli_two_power_sum(std::size_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("two-power sum check needs odd n >= 3");
    Rational lhs;
    BigInt two_m(1);
    for (std::size_t m = 0; m <= n; ++m) {
        lhs += Rational(binomial(n, m) * two_m) * bernoulli_number(m);
        two_m = two_m * BigInt(2);
    }
    return make_identity_check("bernoulli-two-power-sum", "n=" + std::to_string(n),
                               std::move(lhs), Rational(0));
}

IdentityCheckResult check_bernoulli_reflection(std::size_t n, const Rational& x) {
    Rational lhs = bernoulli_poly_eval(n, Rational(1) - x);
    Rational rhs = bernoulli_poly_eval(n, x);
    if (n % 2 == 1) rhs = -rhs;
    std::ostringstream params;
    params << "n=" << n << ";x=" << x.to_string();
    return make_identity_check("bernoulli-reflection", params.str(), std::move(lhs),
                               std::move(rhs));
}

}  // namespace zeta2k
