// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds.  Each criterion pins its own tolerances and a wall-clock target.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "zeta2k/bernoulli.hpp"
#include "zeta2k/fourier.hpp"
#include "zeta2k/identities.hpp"
#include "zeta2k/parseval.hpp"
#include "zeta2k/pi_approx.hpp"
#include "zeta2k/zeta.hpp"

using namespace zeta2k;

namespace {

struct Criterion {
    const char* name;
    double time_target_s;
    std::function<bool(std::string&)> body;
};

Rational rq(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

bool basel_value(std::string& detail) {
    auto z = zeta_closed_form(1);
    if (z.q != rq(1, 6)) {
        detail = "closed form q = " + z.q.to_string() + ", expected 1/6";
        return false;
    }
    return true;
}

bool cross_method_exactness(std::string& detail) {
    for (unsigned k = 1; k <= 100; ++k) {
        if (zeta_inductive(k).q != zeta_closed_form(k).q) {
            detail = "mismatch at k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool half_range_certification(std::string& detail) {
    for (unsigned k = 1; k <= 300; ++k) {
        auto c = check_trinomial_half_range(k);
        if (!c.pass) {
            detail = "k=" + std::to_string(k) + ": " + c.lhs.to_string() +
                     " != " + c.rhs.to_string();
            return false;
        }
        if (k == 1 && c.lhs != Rational(4)) {
            detail = "k=1 anchor is " + c.lhs.to_string() + ", expected 4";
            return false;
        }
        if (k == 2 && c.lhs != Rational(66)) {
            detail = "k=2 anchor is " + c.lhs.to_string() + ", expected 66";
            return false;
        }
    }
    return true;
}

bool identity_suite(std::string& detail) {
    auto expect = [&detail](const IdentityCheckResult& c) {
        if (!c.pass) {
            detail = c.name + " " + c.params + ": " + c.lhs.to_string() + " != " +
                     c.rhs.to_string();
            return false;
        }
        return true;
    };
    for (std::size_t n = 2; n <= 500; ++n) {
        if (!expect(check_bernoulli_recurrence(n))) return false;
    }
    for (std::size_t n = 3; n <= 501; n += 2) {
        if (!expect(check_bernoulli_two_power_sum(n))) return false;
    }
    const Rational points[] = {Rational(0), rq(1, 2), rq(1, 3), rq(2, 5), Rational(-1)};
    for (std::size_t n = 0; n <= 60; ++n) {
        for (const auto& x : points) {
            if (!expect(check_bernoulli_reflection(n, x))) return false;
        }
    }
    for (unsigned k = 1; k <= 300; ++k) {
        auto half = check_trinomial_half_range(k);
        auto full = check_trinomial_full_range(k);
        auto upper = check_trinomial_upper_range(k);
        if (!expect(full) || !expect(upper)) return false;
        if (full.lhs != half.lhs + upper.lhs) {
            detail = "additivity broken at k=" + std::to_string(k);
            return false;
        }
    }
    for (unsigned k = 1; k <= 150; ++k) {
        if (!expect(check_factorial_convolution(k))) return false;
        if (!expect(check_clipped_convolution(k))) return false;
    }
    return true;
}

bool fourier_consistency_suite(std::string& detail) {
    for (unsigned k = 1; k <= 30; ++k) {
        for (unsigned long n : {1UL, 2UL}) {
            auto c = fourier_consistency(k, n);
            if (!c.pass) {
                detail = c.params + ": " + c.lhs + " != " + c.rhs;
                return false;
            }
        }
    }
    for (unsigned k = 1; k <= 8; ++k) {
        for (unsigned long n = 1; n <= 16; ++n) {
            auto pair = fourier_recurrence(k, n);
            double exact_cos = pi_series_eval(pair.cosine_value(), 20).value.to_double();
            double exact_sin = pi_series_eval(pair.sine_value(), 20).value.to_double();
            auto qc = quadrature_oracle(k, n, FourierIntegrand::cosine);
            auto qs = quadrature_oracle(k, n, FourierIntegrand::sine);
            if (!qc.converged || !qs.converged) {
                detail = "quadrature did not converge at k=" + std::to_string(k) +
                         ", n=" + std::to_string(n);
                return false;
            }
            if (std::fabs(qc.value - exact_cos) > 1e-8 || std::fabs(qs.value - exact_sin) > 1e-8) {
                detail = "quadrature off at k=" + std::to_string(k) + ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool parseval_bracketing(std::string& detail) {
    for (unsigned k = 1; k <= 6; ++k) {
        auto rep = parseval_report(k, 100000);
        if (!rep.pass) {
            detail = "k=" + std::to_string(k) + ": gap=" + std::to_string(rep.gap) +
                     " bound=" + std::to_string(rep.tail_bound);
            return false;
        }
        if (k == 1 && rep.gap / rep.target > 1e-4) {
            detail = "k=1 relative gap " + std::to_string(rep.gap / rep.target) + " > 1e-4";
            return false;
        }
    }
    return true;
}

bool decimal_bracketing(std::string& detail) {
    for (unsigned k = 1; k <= 10; ++k) {
        auto bracket = zeta_direct_series(k, 1000);
        double v = zeta_decimal(k, 30).value.to_double();
        if (!(bracket.partial_sum <= v && v <= bracket.partial_sum + bracket.tail_bound)) {
            detail = "k=" + std::to_string(k) + " not bracketed";
            return false;
        }
    }
    return true;
}

bool pi_self_consistency(std::string& detail) {
    auto a = pi_approx(100, PiFormula::machin);
    auto b = pi_approx(100, PiFormula::hutton);
    if (a.decimal() != b.decimal()) {
        detail = "formulas disagree at 100 digits";
        return false;
    }
    if ((a.value - b.value).abs() > a.error + b.error) {
        detail = "intervals of the two formulas do not overlap";
        return false;
    }
    for (int d : {20, 40, 60, 80, 90}) {
        auto coarse = pi_approx(d);
        auto fine = pi_approx(d + 10);
        if ((fine.value - coarse.value).abs() + fine.error > coarse.error) {
            detail = "refinement at " + std::to_string(d) + " digits is not nested";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"basel value zeta(2) = pi^2/6", 1.0, basel_value},
        {"cross-method exactness k = 1..100", 10.0, cross_method_exactness},
        {"half-range certification k = 1..300", 10.0, half_range_certification},
        {"identity suite", 30.0, identity_suite},
        {"fourier consistency and quadrature", 5.0, fourier_consistency_suite},
        {"parseval bracketing k = 1..6, N = 1e5", 10.0, parseval_bracketing},
        {"decimal bracketing k = 1..10", 1.0, decimal_bracketing},
        {"pi self-consistency at 100 digits", 1.0, pi_self_consistency},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.time_target_s) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "time target exceeded";
        }
        std::printf("[%s] %zu. %s (%.3f s, target %.0f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.name, secs, c.time_target_s, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
