#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "horo/empirics.hpp"
#include "horo/rng.hpp"
#include "horo/sampler.hpp"

static void BM_Philox(benchmark::State& state)
{
    horo::Philox4x32 rng(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(rng());
}
BENCHMARK(BM_Philox);

static void BM_PoissonCount(benchmark::State& state)
{
    horo::Philox4x32 rng(2, 0);
    const double mean = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(horo::sample_poisson_count(mean, rng));
}
BENCHMARK(BM_PoissonCount)->Arg(5)->Arg(1000)->Arg(1000000);

// One replication at radius R in d = 2; cost grows like e^R.
static void BM_Replication(benchmark::State& state)
{
    horo::SimConfig cfg;
    cfg.R = static_cast<double>(state.range(0));
    cfg.seed = 3;
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(horo::simulate_total_area(cfg, i++));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * horo::hitting_mass(cfg.R, cfg.d)));
}
BENCHMARK(BM_Replication)->Arg(2)->Arg(4)->Arg(8);

static void BM_EmpiricalDistances(benchmark::State& state)
{
    horo::Philox4x32 rng(4, 0);
    std::vector<double> x(static_cast<std::size_t>(state.range(0)));
    for (auto& v : x) v = horo::standard_normal(rng);
    std::sort(x.begin(), x.end());
    for (auto _ : state) {
        benchmark::DoNotOptimize(horo::empirical_kolmogorov(x, 0.5));
        benchmark::DoNotOptimize(horo::empirical_wasserstein1(x, 0.5));
    }
}
BENCHMARK(BM_EmpiricalDistances)->Arg(100000);
