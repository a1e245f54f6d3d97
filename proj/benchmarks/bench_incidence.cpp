#include <benchmark/benchmark.h>

#include "zq/incidence.hpp"

using namespace zq;

static void BM_DecomposeDistances(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(7, 2);
    const Grid grid(mod, static_cast<std::uint32_t>(state.range(0)));
    const IncidenceContext ctx(grid);
    const PointSet e = PointSet::random(grid, static_cast<std::size_t>(state.range(1)), 1);
    for (auto _ : state) {
        auto dec = decompose_distances(e, ctx);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_DecomposeDistances)
    ->Args({2, 40})
    ->Args({3, 40})
    ->Args({4, 40})
    ->Args({4, 160})
    ->Unit(benchmark::kMillisecond);

static void BM_DecomposeDotProducts(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(7, 2);
    const Grid grid(mod, 3);
    const PointSet e = PointSet::random(grid, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        auto dec = decompose_dot_products(e);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_DecomposeDotProducts)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_PairHistogram(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(5, 2);
    const Grid grid(mod, 4);
    const PointSet e = PointSet::random(grid, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        auto set = distance_set(e);
        benchmark::DoNotOptimize(set);
    }
    state.SetItemsProcessed(state.iterations() * e.size() * e.size());
}
BENCHMARK(BM_PairHistogram)->Arg(100)->Arg(1000)->Arg(4000);

BENCHMARK_MAIN();
