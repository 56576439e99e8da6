#include "zeta2k/fourier.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "zeta2k/combinatorics.hpp"

namespace zeta2k {

namespace {

PiSeries eval_terms(const std::vector<FourierTerm>& terms, unsigned long n) {
    PiSeries out;
    const int parity = (n % 2 == 0) ? 1 : -1;
    for (const auto& t : terms) {
        Rational scale(BigInt(parity), BigInt(n).pow(t.n_exp));
        out += PiSeries::pi_even_power(t.pi_half_exp, t.coeff * scale);
    }
    return out;
}

double ipow(double x, unsigned e) {
    double r = 1.0;
    while (e != 0) {
        if (e & 1u) r *= x;
        x *= x;
        e >>= 1u;
    }
    return r;
}

}  // namespace

PiSeries FourierCoefficientPair::cosine_value() const { return eval_terms(cosine, n); }
PiSeries FourierCoefficientPair::sine_value() const { return eval_terms(sine, n); }
PiSeries FourierCoefficientPair::combined_value() const { return cosine_value() + sine_value(); }

FourierCoefficientPair fourier_recurrence(unsigned k, unsigned long n) {
    if (k == 0 || n == 0) {
        throw std::invalid_argument("fourier_recurrence needs k >= 1 and n >= 1");
    }
    std::vector<FourierTerm> cos_terms;
    std::vector<FourierTerm> sin_terms = {{0, 1, Rational(-2)}};
    for (unsigned order = 2; order <= k; ++order) {
        if (order % 2 == 0) {
            // integrating by parts once: cosine side = -(order/n) * previous sine side
            std::vector<FourierTerm> next;
            next.reserve(sin_terms.size());
            for (const auto& t : sin_terms) {
                next.push_back({t.pi_half_exp, t.n_exp + 1,
                                t.coeff * Rational(-static_cast<long long>(order))});
            }
            cos_terms = std::move(next);
            sin_terms.clear();
        } else {
            // sine side regains a boundary term of pi^{order-1} alongside
            // +(order/n) * previous cosine side
            std::vector<FourierTerm> next;
            next.reserve(cos_terms.size() + 1);
            next.push_back({static_cast<long>((order - 1) / 2), 1, Rational(-2)});
            for (const auto& t : cos_terms) {
                next.push_back({t.pi_half_exp, t.n_exp + 1,
                                t.coeff * Rational(static_cast<long long>(order))});
            }
            sin_terms = std::move(next);
            cos_terms.clear();
        }
    }
    FourierCoefficientPair out;
    out.k = k;
    out.n = n;
    out.cosine = std::move(cos_terms);
    out.sine = std::move(sin_terms);
    return out;
}

Rational FourierClosedForm::gamma_at(long l) const {
    if (l < 0 || static_cast<std::size_t>(l) >= gamma.size()) return Rational(0);
    return gamma[static_cast<std::size_t>(l)];
}

PiSeries FourierClosedForm::value(unsigned long n) const {
    if (n == 0) throw std::invalid_argument("coefficient index n must be >= 1");
    PiSeries out;
    const int parity = (n % 2 == 0) ? 1 : -1;
    for (std::size_t l = 0; l < gamma.size(); ++l) {
        unsigned long e = k - 2 * static_cast<unsigned long>(l);
        Rational scale(BigInt(parity), BigInt(n).pow(e));
        out += PiSeries::pi_even_power(static_cast<long>(l), gamma[l] * scale);
    }
    return out;
}

FourierClosedForm fourier_closed_form(unsigned k) {
    if (k == 0) throw std::invalid_argument("fourier_closed_form needs k >= 1");
    FourierClosedForm out;
    out.k = k;
    const long lmax = (static_cast<long>(k) - 1) / 2;
    const BigInt two_kfact = BigInt(2) * factorial(k);
    for (long l = 0; l <= lmax; ++l) {
        Rational mag(two_kfact, factorial(2 * static_cast<unsigned long>(l) + 1));
        bool negative = (k / 2 + static_cast<unsigned>(l) + 1) % 2 == 1;
        out.gamma.push_back(negative ? -mag : mag);
    }
    return out;
}

AZero a_zero(unsigned k) {
    if (k == 0) throw std::invalid_argument("a_zero needs k >= 1");
    AZero out;
    out.k = k;
    if (k % 2 == 0) {
        out.value = PiSeries::pi_even_power(k / 2, Rational(BigInt(1), BigInt(k + 1)));
    }
    return out;
}

SeriesIdentityResult fourier_consistency(unsigned k, unsigned long n) {
    FourierCoefficientPair rec = fourier_recurrence(k, n);
    FourierClosedForm closed = fourier_closed_form(k);

    bool structural = (k % 2 == 0) ? rec.sine.empty() : rec.cosine.empty();
    const auto& live = (k % 2 == 0) ? rec.cosine : rec.sine;
    if (live.size() != closed.gamma.size()) structural = false;
    for (const auto& t : live) {
        if (t.n_exp != k - 2 * static_cast<unsigned long>(t.pi_half_exp)) structural = false;
        if (t.coeff != closed.gamma_at(t.pi_half_exp)) structural = false;
    }

    PiSeries lhs = rec.combined_value();
    PiSeries rhs = closed.value(n);
    std::ostringstream params;
    params << "k=" << k << ";n=" << n;
    return {"fourier-recurrence-vs-closed-form", params.str(), lhs.to_string(), rhs.to_string(),
            structural && lhs == rhs};
}

QuadratureResult quadrature_oracle(unsigned k, unsigned long n, FourierIntegrand which) {
    if (k == 0 || k > 12 || n == 0 || n > 32) {
        throw std::invalid_argument("quadrature envelope is 1 <= k <= 12, 1 <= n <= 32");
    }
    const double pi = std::acos(-1.0);
    const double dn = static_cast<double>(n);
    auto f = [&](double x) {
        double p = ipow(x, k);
        switch (which) {
            case FourierIntegrand::cosine: return p * std::cos(dn * x);
            case FourierIntegrand::sine: return p * std::sin(dn * x);
            case FourierIntegrand::mean: return p;
        }
        std::abort();
    };
    const double scale = (which == FourierIntegrand::mean) ? 1.0 / (2.0 * pi) : 1.0 / pi;

    std::size_t panels = 4;
    double h = 2.0 * pi / static_cast<double>(panels);
    double trap = 0.5 * (f(-pi) + f(pi));
    for (std::size_t i = 1; i < panels; ++i) trap += f(-pi + static_cast<double>(i) * h);
    trap *= h;

    QuadratureResult out;
    bool have_prev = false;
    double prev_simpson = 0.0;
    for (int doubling = 1; doubling <= 20; ++doubling) {
        // midpoints of the current panels, compensated to keep the sum clean
        double mid_sum = 0.0, comp = 0.0;
        for (std::size_t i = 0; i < panels; ++i) {
            double y = f(-pi + (static_cast<double>(i) + 0.5) * h) - comp;
            double t = mid_sum + y;
            comp = (t - mid_sum) - y;
            mid_sum = t;
        }
        double trap_fine = 0.5 * trap + 0.5 * h * mid_sum;
        double simpson = (4.0 * trap_fine - trap) / 3.0 * scale;
        out.value = simpson;
        out.doublings = doubling;
        // equally spaced nodes coarser than the oscillation put every sample on
        // a zero of sin(nx), so two agreeing estimates mean nothing until the
        // grid resolves n full periods
        bool resolved = panels >= 8 * n;
        if (have_prev && resolved && std::fabs(simpson - prev_simpson) < 1e-12) {
            out.converged = true;
            return out;
        }
        prev_simpson = simpson;
        have_prev = true;
        trap = trap_fine;
        panels *= 2;
        h *= 0.5;
    }
    return out;
}

}  // namespace zeta2k
