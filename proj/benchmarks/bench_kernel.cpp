#include <benchmark/benchmark.h>

#include "hartogs/classify.hpp"
#include "hartogs/kernel.hpp"

using namespace hartogs;

static void BM_EpsilonCoefficients(benchmark::State& state) {
    auto spec = type_i(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    Rational mu(spec.p, spec.d + 1);
    for (auto _ : state) {
        auto expansion = epsilon_coefficients(spec, mu, 1);
        benchmark::DoNotOptimize(expansion);
    }
}
BENCHMARK(BM_EpsilonCoefficients)->Arg(2)->Arg(4)->Arg(6);

static void BM_EpsilonAtX(benchmark::State& state) {
    auto spec = type_iv(static_cast<int>(state.range(0)));
    Rational mu(spec.p, spec.d + 1);
    Rational alpha(4 * spec.d + 1, 3);
    Rational x(5, 7);
    for (auto _ : state) {
        auto value = epsilon_at_X(spec, mu, 2, alpha, x);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_EpsilonAtX)->Arg(5)->Arg(10)->Arg(20);

static void BM_EpsilonDouble(benchmark::State& state) {
    auto spec = type_i(2, 2);
    KernelParams params{spec, Rational(1), 1, Rational(12)};
    PointCH point{{Complex(0.2, 0.1), Complex(-0.1, 0.05), Complex(0.1, 0.0), Complex(0.0, 0.1)},
                  {Complex(0.3, 0.0)}};
    for (auto _ : state) {
        double value = epsilon(params, point);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_EpsilonDouble);

static void BM_ClassifySweep(benchmark::State& state) {
    SweepRanges ranges;
    ranges.type_i_max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto verdicts = classify_sweep(ranges);
        benchmark::DoNotOptimize(verdicts);
    }
}
BENCHMARK(BM_ClassifySweep)->Arg(6)->Arg(12)->Arg(24);
