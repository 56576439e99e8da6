#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "zeta2k/pi_approx.hpp"
#include "zeta2k/pi_series.hpp"

using zeta2k::BigInt;
using zeta2k::PiApprox;
using zeta2k::PiFormula;
using zeta2k::PiSeries;
using zeta2k::Rational;
using zeta2k::pi_approx;
using zeta2k::pi_series_eval;
using zeta2k::pi_series_render;

namespace {

Rational rq(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

PiSeries random_series(std::mt19937_64& rng) {
    PiSeries s;
    int terms = static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        long l = static_cast<long>(rng() % 4);
        long n = static_cast<long>(rng() % 21) - 10;
        long d = static_cast<long>(rng() % 9) + 1;
        s += PiSeries::pi_even_power(l, rq(n, d));
    }
    return s;
}

}  // namespace

TEST_CASE("pi to 20 and 50 digits") {
    CHECK(pi_approx(20).decimal() == "3.14159265358979323846");
    CHECK(pi_approx(50).decimal() == "3.14159265358979323846264338327950288419716939937511");
    CHECK(pi_approx(1).decimal() == "3.1");
    CHECK_THROWS_AS(pi_approx(0), std::invalid_argument);
}

TEST_CASE("published error bound is 10^-digits and encloses pi") {
    PiApprox p = pi_approx(30);
    CHECK(p.error == Rational(BigInt(1), BigInt(10).pow(30)));
    // reference value at higher precision must sit inside the interval
    PiApprox fine = pi_approx(60);
    CHECK((fine.value - p.value).abs() <= p.error);
}

TEST_CASE("two arctangent formulas agree") {
    for (int digits : {10, 40, 100}) {
        PiApprox a = pi_approx(digits, PiFormula::machin);
        PiApprox b = pi_approx(digits, PiFormula::hutton);
        CHECK(a.decimal() == b.decimal());
        CHECK((a.value - b.value).abs() <= a.error + b.error);
    }
}

TEST_CASE("refined intervals nest") {
    for (int d : {5, 15, 25, 45, 80}) {
        PiApprox coarse = pi_approx(d);
        PiApprox fine = pi_approx(d + 10);
        // [fine.value +- fine.error] inside [coarse.value +- coarse.error]
        CHECK((fine.value - coarse.value).abs() + fine.error <= coarse.error);
    }
}

TEST_CASE("series construction and canonical form") {
    PiSeries s = PiSeries::constant(rq(-12, 1)) + PiSeries::pi_even_power(1, Rational(2));
    CHECK(s.to_string() == "-12 + 2*pi^2");
    CHECK(s.coeff(0) == Rational(-12));
    CHECK(s.coeff(1) == Rational(2));
    CHECK(s.coeff(5) == Rational(0));
    CHECK(s.max_half_exponent() == 1);

    PiSeries zero;
    CHECK(zero.to_string() == "0");
    CHECK(zero.is_zero());
    CHECK(zero.max_half_exponent() == -1);

    // cancelling terms may not linger as stored zeros
    PiSeries t = PiSeries::pi_even_power(2, Rational(5));
    t -= PiSeries::pi_even_power(2, Rational(5));
    CHECK(t == zero);
    CHECK(t.terms().empty());

    CHECK(PiSeries::pi_even_power(1, rq(1, 6)).to_string() == "1/6*pi^2");
    CHECK(PiSeries::pi_even_power(2).to_string() == "1*pi^4");
}

TEST_CASE("series algebra: ring identities on randoms") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 300; ++iter) {
        PiSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * (a + b) == a * a + a * b + a * b + b * b);
        CHECK(a - a == PiSeries{});
    }
}

TEST_CASE("scale and negate") {
    PiSeries s = PiSeries::constant(Rational(3)) + PiSeries::pi_even_power(2, rq(1, 2));
    PiSeries doubled = s;
    doubled.scale(Rational(2));
    CHECK(doubled == s + s);
    CHECK(-s + s == PiSeries{});
    PiSeries wiped = s;
    wiped.scale(Rational(0));
    CHECK(wiped.is_zero());
}

TEST_CASE("evaluation of constants is exact") {
    auto bv = pi_series_eval(PiSeries::constant(rq(22, 7)), 10);
    CHECK(bv.value == rq(22, 7));
    CHECK(bv.error.is_zero());
    auto zero = pi_series_eval(PiSeries{}, 10);
    CHECK(zero.value.is_zero());
    CHECK(zero.error.is_zero());
}

TEST_CASE("evaluation of pi^2/6 against the direct sum oracle") {
    // oracle: sum of 1/n^2 for n <= N brackets the limit within (0, 1/N)
    const int N = 20000;
    double s = 0;
    for (int n = N; n >= 1; --n) s += 1.0 / (static_cast<double>(n) * n);
    auto bv = pi_series_eval(PiSeries::pi_even_power(1, rq(1, 6)), 15);
    CHECK(bv.error <= Rational(BigInt(1), BigInt(10).pow(15)));
    double v = bv.value.to_double();
    CHECK(v > s);
    CHECK(v < s + 1.0 / N);
}

TEST_CASE("evaluation precision scales with the requested digits") {
    // pi^4 at 40 digits, compared against a sharper evaluation
    PiSeries s = PiSeries::pi_even_power(2);
    auto coarse = pi_series_eval(s, 40);
    auto fine = pi_series_eval(s, 60);
    CHECK((coarse.value - fine.value).abs() <= coarse.error + fine.error);
    CHECK(coarse.error <= Rational(BigInt(1), BigInt(10).pow(40)));
    auto rendered = pi_series_render(s, 30);
    CHECK(rendered.text == "97.409091034002437236440332688705");
    CHECK((rendered.value - fine.value).abs() <= rendered.error + fine.error);
}

TEST_CASE("pi^2 rendering anchor") {
    auto r = pi_series_render(PiSeries::pi_even_power(1), 30);
    CHECK(r.text == "9.869604401089358618834490999876");
}
