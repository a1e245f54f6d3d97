#include <benchmark/benchmark.h>

#include "zq/char_sums.hpp"

using namespace zq;

static void BM_GaussDirect(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        for (std::int64_t a = 1; a < 8; ++a)
            benchmark::DoNotOptimize(gauss_sum_direct({a, a + 1, n}));
    }
    state.SetItemsProcessed(state.iterations() * 7 * n);
}
BENCHMARK(BM_GaussDirect)->Arg(27)->Arg(125)->Arg(343);

static void BM_GaussClosed(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        for (std::int64_t a = 1; a < 8; ++a)
            benchmark::DoNotOptimize(gauss_sum_closed({a, a + 1, n}));
    }
}
BENCHMARK(BM_GaussClosed)->Arg(27)->Arg(125)->Arg(343);

static void BM_KloostermanSaliePair(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(7, 3);
    for (auto _ : state) {
        for (std::int64_t a = 0; a < 16; ++a)
            benchmark::DoNotOptimize(kloosterman_salie(a, 1, mod));
    }
    state.SetItemsProcessed(state.iterations() * 16 * mod.unit_count());
}
BENCHMARK(BM_KloostermanSaliePair);

BENCHMARK_MAIN();
