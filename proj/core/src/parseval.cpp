#include "zeta2k/parseval.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zeta2k/compensated.hpp"
#include "zeta2k/fourier.hpp"

namespace zeta2k {

namespace {

constexpr unsigned long kExactPrefix = 32;
constexpr int kEvalDigits = 25;

double ipow(double x, unsigned long e) {
    double r = 1.0;
    while (e != 0) {
        if (e & 1ul) r *= x;
        x *= x;
        e >>= 1ul;
    }
    return r;
}

// double(gamma_l * pi^{2l}) for each l, from the exact table
std::vector<double> scaled_gamma_table(const FourierClosedForm& cf) {
    std::vector<double> g;
    g.reserve(cf.gamma.size());
    for (std::size_t l = 0; l < cf.gamma.size(); ++l) {
        auto bounded = pi_series_eval(
            PiSeries::pi_even_power(static_cast<long>(l), cf.gamma[l]), kEvalDigits);
        g.push_back(bounded.value.to_double());
    }
    return g;
}

}  // namespace

double parseval_partial_sum(unsigned k, unsigned long terms) {
    if (k == 0 || terms == 0) throw std::invalid_argument("parseval_partial_sum needs k >= 1, terms >= 1");
    FourierClosedForm cf = fourier_closed_form(k);
    CompensatedSum acc;

    double mean = pi_series_eval(a_zero(k).value, kEvalDigits).value.to_double();
    acc.add(2.0 * mean * mean);

    const unsigned long exact_upto = std::min<unsigned long>(terms, kExactPrefix);
    for (unsigned long n = 1; n <= exact_upto; ++n) {
        double c = pi_series_eval(cf.value(n), kEvalDigits).value.to_double();
        acc.add(c * c);
    }

    std::vector<double> g = scaled_gamma_table(cf);
    for (unsigned long n = exact_upto + 1; n <= terms; ++n) {
        // by n = 33 the highest-l term dominates, so the float sum is benign
        double c = 0.0;
        for (std::size_t l = 0; l < g.size(); ++l) {
            c += g[l] / ipow(static_cast<double>(n), k - 2 * static_cast<unsigned long>(l));
        }
        acc.add(c * c);
    }
    return acc.value() * (1.0 - 4.0 * DBL_EPSILON);
}

double parseval_target(unsigned k) {
    if (k == 0) throw std::invalid_argument("parseval_target needs k >= 1");
    PiSeries mean_square = PiSeries::pi_even_power(
        static_cast<long>(k), Rational(BigInt(2), BigInt(2 * k + 1)));
    return pi_series_eval(mean_square, kEvalDigits).value.to_double();
}

double parseval_tail_bound(unsigned k, unsigned long terms) {
    if (k == 0 || terms == 0) throw std::invalid_argument("parseval_tail_bound needs k >= 1, terms >= 1");
    std::vector<double> g = scaled_gamma_table(fourier_closed_form(k));
    double c = 0.0;
    for (double v : g) c += std::fabs(v);
    return c * c / static_cast<double>(terms);
}

ParsevalReport parseval_report(unsigned k, unsigned long terms) {
    ParsevalReport out;
    out.k = k;
    out.terms = terms;
    out.partial_sum = parseval_partial_sum(k, terms);
    out.target = parseval_target(k);
    out.tail_bound = parseval_tail_bound(k, terms);
    out.gap = out.target - out.partial_sum;
    out.pass = out.gap >= 0.0 && out.gap <= out.tail_bound * (1.0 + 1e-9);
    return out;
}

}  // namespace zeta2k
