#include <benchmark/benchmark.h>

#include "hartogs/algebra.hpp"

using namespace hartogs;

static void BM_HuaPoly(benchmark::State& state) {
    auto spec = type_i(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto chi = hua_poly(spec);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(BM_HuaPoly)->Arg(2)->Arg(4)->Arg(6)->Arg(7);

static void BM_ChiTilde(benchmark::State& state) {
    auto spec = type_i(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    Rational mu(4, 5);
    for (auto _ : state) {
        auto ct = chi_tilde(spec, mu);
        benchmark::DoNotOptimize(ct);
    }
}
BENCHMARK(BM_ChiTilde)->Arg(2)->Arg(4)->Arg(6)->Arg(7);

static void BM_ClosedDValues(benchmark::State& state) {
    auto spec = type_iv(static_cast<int>(state.range(0)));
    Rational mu(spec.p, spec.d + 1);
    for (auto _ : state) {
        auto values = closed_D_values(spec, mu);
        benchmark::DoNotOptimize(values);
    }
}
BENCHMARK(BM_ClosedDValues)->Arg(5)->Arg(20)->Arg(60);

static void BM_DirectDifferences(benchmark::State& state) {
    auto spec = type_iv(static_cast<int>(state.range(0)));
    Rational mu(spec.p, spec.d + 1);
    auto ct = chi_tilde(spec, mu);
    for (auto _ : state) {
        auto v = finite_difference(ct, static_cast<unsigned>(spec.d - 1), Rational(spec.d));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DirectDifferences)->Arg(5)->Arg(20)->Arg(60);

static void BM_Partitions(benchmark::State& state) {
    for (auto _ : state) {
        auto parts = partitions(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(parts);
    }
}
BENCHMARK(BM_Partitions)->Arg(8)->Arg(12)->Arg(16);
