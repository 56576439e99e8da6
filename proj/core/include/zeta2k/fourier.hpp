#pragma once

#include <cstddef>
#include <vector>

#include "zeta2k/identity_check.hpp"
#include "zeta2k/pi_series.hpp"
#include "zeta2k/rational.hpp"

namespace zeta2k {

// One symbolic term of a Fourier coefficient: coeff * (-1)^n * pi^{2l} / n^e.
// The whole n-dependence lives in the global parity sign and the explicit
// exponent e, so the term list itself does not depend on n.
struct FourierTerm {
    long pi_half_exp = 0;
    unsigned long n_exp = 0;
    Rational coeff;
};

// Exact cosine/sine coefficients of the 2pi-periodic extension of x^k,
// as produced by the integration-by-parts recurrence.  Parity kills one
// side outright: the cosine list is empty for odd k, the sine list for
// even k.  Every surviving term satisfies n_exp == k - 2*pi_half_exp >= 1.
struct FourierCoefficientPair {
    unsigned k = 0;
    unsigned long n = 0;
    std::vector<FourierTerm> cosine;
    std::vector<FourierTerm> sine;

    PiSeries cosine_value() const;
    PiSeries sine_value() const;
    // cosine_value + sine_value; one side is zero, so this is the whole
    // coefficient and its square equals the sum of the two squares
    PiSeries combined_value() const;
};

FourierCoefficientPair fourier_recurrence(unsigned k, unsigned long n);

// Closed form of the same coefficients: the nonzero side equals
// sum over l of gamma[l] * (-1)^n * pi^{2l} / n^{k-2l}, with
// gamma[l] = (2*k!/(2l+1)!) * (-1)^{floor(k/2)+l+1} for 0 <= l <= (k-1)/2.
struct FourierClosedForm {
    unsigned k = 0;
    std::vector<Rational> gamma;

    // zero outside the defined range
    Rational gamma_at(long l) const;
    PiSeries value(unsigned long n) const;
};

FourierClosedForm fourier_closed_form(unsigned k);

// Mean value of x^k over one period: zero for odd k, pi^k/(k+1) for even k.
struct AZero {
    unsigned k = 0;
    PiSeries value;
};

AZero a_zero(unsigned k);

// Exact agreement of the two constructions at one (k, n), plus the
// structural side conditions (parity vanishing, n_exp law).
SeriesIdentityResult fourier_consistency(unsigned k, unsigned long n);

// Floating-point cross-check of the defining integrals, independent of the
// exact machinery above.
enum class FourierIntegrand { cosine, sine, mean };

struct QuadratureResult {
    double value = 0.0;
    bool converged = false;
    int doublings = 0;
};

// Trapezoid refinement with Simpson extrapolation of
//   (1/pi) * integral of x^k * trig(n*x) over (-pi, pi)
// (or (1/2pi) * integral of x^k for the mean).  Panels double until two
// successive extrapolated values differ by less than 1e-12 in absolute
// terms; the budget tops out at 2^22 panels.  The threshold is absolute,
// so integrands whose magnitude pushes one ulp past it (large even k) can
// exhaust the budget — that is reported via `converged`, never thrown.
// Accuracy envelope: k <= 12, n <= 32.
QuadratureResult quadrature_oracle(unsigned k, unsigned long n, FourierIntegrand which);

}  // namespace zeta2k
