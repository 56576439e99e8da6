#include <benchmark/benchmark.h>

#include "zeta2k/bernoulli.hpp"
#include "zeta2k/fourier.hpp"
#include "zeta2k/identities.hpp"
#include "zeta2k/parseval.hpp"
#include "zeta2k/pi_approx.hpp"
#include "zeta2k/zeta.hpp"

using namespace zeta2k;

namespace {

// table is warmed once so the loop measures amortized lookup, not first growth
void BM_BernoulliValueWarm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    benchmark::DoNotOptimize(bernoulli_number(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_number(n));
    }
}

void BM_BernoulliRecurrenceCheck(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    benchmark::DoNotOptimize(bernoulli_number(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_bernoulli_recurrence(n));
    }
}

void BM_ZetaClosedForm(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    benchmark::DoNotOptimize(bernoulli_number(2 * k));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeta_closed_form(k));
    }
}

void BM_ZetaConvolutionCoeff(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const unsigned j_max = 2 * ((k - 1) / 2);
    for (auto _ : state) {
        for (unsigned j = 1; j <= j_max; ++j) {
            benchmark::DoNotOptimize(convolution_coeff(k, j));
        }
    }
}

void BM_TrinomialHalfRange(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_trinomial_half_range(k));
    }
}

void BM_ParsevalPartialSum(benchmark::State& state) {
    const auto terms = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parseval_partial_sum(3, terms));
    }
}

void BM_PiApprox(benchmark::State& state) {
    const auto digits = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pi_approx(digits));
    }
}

void BM_QuadratureOracle(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadrature_oracle(4, n, FourierIntegrand::cosine));
    }
}

}  // namespace

BENCHMARK(BM_BernoulliValueWarm)->Arg(64)->Arg(256);
BENCHMARK(BM_BernoulliRecurrenceCheck)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_ZetaClosedForm)->Arg(10)->Arg(50)->Arg(100);
BENCHMARK(BM_ZetaConvolutionCoeff)->Arg(10)->Arg(25)->Arg(50);
BENCHMARK(BM_TrinomialHalfRange)->Arg(25)->Arg(100)->Arg(300);
BENCHMARK(BM_ParsevalPartialSum)->Arg(1000)->Arg(100000);
BENCHMARK(BM_PiApprox)->Arg(25)->Arg(100);
BENCHMARK(BM_QuadratureOracle)->Arg(1)->Arg(8);

BENCHMARK_MAIN();
