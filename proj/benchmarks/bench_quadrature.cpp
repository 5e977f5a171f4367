#include <benchmark/benchmark.h>

#include "horo/analytics.hpp"
#include "horo/euclidean.hpp"
#include "horo/special.hpp"

static void BM_Integrals(benchmark::State& state)
{
    const horo::Dimension d(static_cast<int>(state.range(0)));
    const double R = static_cast<double>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(horo::integrals(R, d));
}
BENCHMARK(BM_Integrals)->Args({2, 2})->Args({3, 8})->Args({50, 10})->Args({1000, 20});

static void BM_JTransformed(benchmark::State& state)
{
    const horo::Dimension d(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(horo::j_transformed(5.0, d));
}
BENCHMARK(BM_JTransformed)->Arg(3)->Arg(100)->Arg(10000);

static void BM_VarianceTwoSided(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(horo::variance_two_sided(10.0, horo::Dimension(10)));
}
BENCHMARK(BM_VarianceTwoSided);

static void BM_BesselK0(benchmark::State& state)
{
    double z = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(horo::log_bessel_k0(z));
        z = z < 100.0 ? z * 1.1 : 0.5;
    }
}
BENCHMARK(BM_BesselK0);

static void BM_EuclidPowerIntegral(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(horo::euclid_power_integral(5.0, 30, 4));
}
BENCHMARK(BM_EuclidPowerIntegral);
