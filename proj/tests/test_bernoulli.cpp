#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zeta2k/bernoulli.hpp"
#include "zeta2k/combinatorics.hpp"

using zeta2k::BernoulliTable;
using zeta2k::BigInt;
using zeta2k::Rational;
using zeta2k::bernoulli_number;
using zeta2k::bernoulli_poly_eval;

namespace {

Rational rq(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t c = 2; c <= limit; ++c) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= c; ++d) {
            if (c % d == 0) { prime = false; break; }
        }
        if (prime) ps.push_back(c);
    }
    return ps;
}

}  // namespace

TEST_CASE("bernoulli numbers: frozen anchors") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == rq(-1, 2));
    CHECK(bernoulli_number(2) == rq(1, 6));
    CHECK(bernoulli_number(4) == rq(-1, 30));
    CHECK(bernoulli_number(6) == rq(1, 42));
    CHECK(bernoulli_number(8) == rq(-1, 30));
    CHECK(bernoulli_number(10) == rq(5, 66));
    CHECK(bernoulli_number(12) == rq(-691, 2730));
    CHECK(bernoulli_number(14) == rq(7, 6));
    CHECK(bernoulli_number(16) == rq(-3617, 510));
    CHECK(bernoulli_number(18) == rq(43867, 798));
    CHECK(bernoulli_number(20) == rq(-174611, 330));
    CHECK(bernoulli_number(24) == rq(-236364091, 2730));
    CHECK(bernoulli_number(30) == rq(8615841276005LL, 14322));
    for (std::size_t n = 3; n <= 99; n += 2) CHECK(bernoulli_number(n).is_zero());
}

TEST_CASE("bernoulli numbers: von Staudt-Clausen denominator and integrality") {
    auto primes = primes_up_to(200);
    for (std::size_t n = 2; n <= 160; n += 2) {
        BigInt expected_den(1);
        Rational prime_part;
        for (auto p : primes) {
            if (n % (p - 1) == 0) {
                expected_den = expected_den * BigInt(p);
                prime_part += Rational(BigInt(1), BigInt(p));
            }
        }
        Rational b = bernoulli_number(n);
        CHECK(b.denominator() == expected_den);
        CHECK((b + prime_part).is_integer());
    }
}

TEST_CASE("bernoulli numbers: even-index sign alternation") {
    for (std::size_t k = 1; k <= 60; ++k) {
        Rational b = bernoulli_number(2 * k);
        CHECK_FALSE(b.is_zero());
        CHECK(b.is_negative() == (k % 2 == 0));
    }
}

TEST_CASE("bernoulli polynomial: power-sum oracle") {
    // sum of m^p for m < M, brute-forced in integers, must equal
    // (B_{p+1}(M) - B_{p+1}) / (p+1)
    for (unsigned p = 1; p <= 8; ++p) {
        for (long long M : {1LL, 2LL, 5LL, 13LL, 40LL}) {
            BigInt brute(0);
            for (long long m = 0; m < M; ++m) brute = brute + BigInt(m).pow(p);
            Rational via_poly = (bernoulli_poly_eval(p + 1, Rational(M)) - bernoulli_number(p + 1)) /
                                Rational(static_cast<long long>(p + 1));
            CHECK(via_poly == Rational(brute));
        }
    }
}

TEST_CASE("bernoulli polynomial: point anchors") {
    CHECK(bernoulli_poly_eval(2, rq(1, 3)) == rq(-1, 18));
    CHECK(bernoulli_poly_eval(2, rq(2, 3)) == rq(-1, 18));
    CHECK(bernoulli_poly_eval(3, rq(1, 2)).is_zero());
    CHECK(bernoulli_poly_eval(1, Rational(1)) == rq(1, 2));
    for (std::size_t n = 0; n <= 14; ++n) {
        CHECK(bernoulli_poly_eval(n, Rational(0)) == bernoulli_number(n));
        if (n >= 2) CHECK(bernoulli_poly_eval(n, Rational(1)) == bernoulli_number(n));
        // halving anchor: B_n(1/2) == (2^{1-n} - 1) * B_n
        Rational half = bernoulli_poly_eval(n, rq(1, 2));
        Rational scale = Rational(BigInt(2), BigInt(2).pow(n)) - Rational(1);
        CHECK(half == scale * bernoulli_number(n));
    }
}

TEST_CASE("bernoulli polynomial: forward difference property") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 1 + rng() % 12;
        Rational x = rq(static_cast<long long>(rng() % 41) - 20, static_cast<long long>(rng() % 7) + 1);
        Rational diff = bernoulli_poly_eval(n, x + Rational(1)) - bernoulli_poly_eval(n, x);
        Rational expected = Rational(static_cast<long long>(n)) * x.pow(n - 1);
        CHECK(diff == expected);
    }
}

TEST_CASE("identity checks: recurrence, two-power sum, reflection") {
    for (std::size_t n = 2; n <= 80; ++n) {
        auto r = zeta2k::check_bernoulli_recurrence(n);
        CHECK(r.pass);
        CHECK(r.lhs == r.rhs);
    }
    for (std::size_t n = 3; n <= 81; n += 2) {
        CHECK(zeta2k::check_bernoulli_two_power_sum(n).pass);
    }
    const Rational points[] = {Rational(0), rq(1, 2), rq(1, 3), rq(2, 5), Rational(-1)};
    for (std::size_t n = 0; n <= 24; ++n) {
        for (const auto& x : points) {
            CHECK(zeta2k::check_bernoulli_reflection(n, x).pass);
        }
    }
    CHECK_THROWS_AS(zeta2k::check_bernoulli_recurrence(1), std::invalid_argument);
    CHECK_THROWS_AS(zeta2k::check_bernoulli_two_power_sum(4), std::invalid_argument);

    auto named = zeta2k::check_bernoulli_reflection(4, rq(1, 3));
    CHECK(named.name == "bernoulli-reflection");
    CHECK(named.params == "n=4;x=1/3");
}

TEST_CASE("two-power sum closed form holds at every parity") {
    // independent loop: sum C(n,m)*2^m*B_m == (2 - 2^n)*B_n
    for (std::size_t n = 2; n <= 40; ++n) {
        Rational lhs;
        for (std::size_t m = 0; m <= n; ++m) {
            lhs += Rational(zeta2k::binomial(n, m) * BigInt(2).pow(m)) * bernoulli_number(m);
        }
        Rational rhs = (Rational(2) - Rational(BigInt(2).pow(n))) * bernoulli_number(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("perturbation hook breaks and restores the recurrence") {
    BernoulliTable::set_perturbation(12, rq(1, 1000003));
    CHECK(bernoulli_number(12) != rq(-691, 2730));
    CHECK_FALSE(zeta2k::check_bernoulli_recurrence(14).pass);
    BernoulliTable::clear_perturbation();
    CHECK(bernoulli_number(12) == rq(-691, 2730));
    CHECK(zeta2k::check_bernoulli_recurrence(14).pass);
}

TEST_CASE("table is safe under concurrent growth") {
    Rational expected = bernoulli_number(240);
    std::vector<std::thread> pool;
    std::vector<Rational> seen(8);
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([t, &seen] {
            Rational acc;
            for (std::size_t n = 2 + static_cast<std::size_t>(t); n <= 240; n += 2) {
                acc = bernoulli_number(n);
            }
            seen[static_cast<std::size_t>(t)] = bernoulli_number(240);
            (void)acc;
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& v : seen) CHECK(v == expected);
}
