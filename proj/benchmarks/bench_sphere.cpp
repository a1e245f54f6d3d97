#include <benchmark/benchmark.h>

#include "zq/sphere.hpp"

using namespace zq;

static void BM_SphereCounts(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(7, 2);
    const Grid grid(mod, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        auto counts = sphere_counts(grid);
        benchmark::DoNotOptimize(counts);
    }
    state.SetItemsProcessed(state.iterations() * grid.cells());
}
BENCHMARK(BM_SphereCounts)->Arg(2)->Arg(3)->Arg(4);

static void BM_DecayTransform(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(7, 2);
    const SphereSpec spec(mod, static_cast<std::uint32_t>(state.range(0)), 1);
    for (auto _ : state) {
        auto rep = sphere_fourier_decay(spec);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_DecayTransform)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DecayClosed(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(7, 2);
    const std::uint32_t d = static_cast<std::uint32_t>(state.range(0));
    const Grid grid(mod, d);
    const FrequencyClassIndex classes = FrequencyClassIndex::build(grid);
    const SphereHatEvaluator eval(mod, d);
    for (auto _ : state) {
        auto rep = sphere_fourier_decay_closed(SphereSpec(mod, d, 1), classes, eval);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_DecayClosed)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FrequencyClassBuild(benchmark::State& state) {
    const Modulus mod = Modulus::odd_prime_power(7, 2);
    const Grid grid(mod, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        auto classes = FrequencyClassIndex::build(grid);
        benchmark::DoNotOptimize(classes);
    }
    state.SetItemsProcessed(state.iterations() * grid.cells());
}
BENCHMARK(BM_FrequencyClassBuild)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
