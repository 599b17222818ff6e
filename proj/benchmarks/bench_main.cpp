#include <benchmark/benchmark.h>

#include "krull/invariants.hpp"
#include "krull/presets.hpp"

using namespace krull;

static void BM_AtomsCyclic(benchmark::State& state) {
    auto a = preset_from_name("cyclic:" + std::to_string(state.range(0))).alphabet;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_atoms(a).size());
}
BENCHMARK(BM_AtomsCyclic)->DenseRange(4, 8, 2);

static void BM_AtomsCube(benchmark::State& state) {
    auto a = preset_from_name("cube:" + std::to_string(state.range(0)) + ":0").alphabet;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_atoms(a).size());
}
BENCHMARK(BM_AtomsCube)->DenseRange(2, 3);

static void BM_Factorize(benchmark::State& state) {
    AtomSet a = enumerate_atoms(preset_from_name("cyclic:5").alphabet);
    Vec b(a.alphabet->size(), state.range(0));
    b[0] = 0;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(a, b).size());
}
BENCHMARK(BM_Factorize)->Arg(2)->Arg(5)->Arg(8);

static void BM_Covers(benchmark::State& state) {
    for (auto _ : state) {
        Monoid h(enumerate_atoms(preset_from_name("thm74:3:2").alphabet));
        benchmark::DoNotOptimize(h.monoid_tame());
    }
}
BENCHMARK(BM_Covers);

static void BM_Unions(benchmark::State& state) {
    for (auto _ : state) {
        Monoid h(enumerate_atoms(preset_from_name("cyclic:6").alphabet));
        benchmark::DoNotOptimize(h.unions(state.range(0)).rho);
    }
}
BENCHMARK(BM_Unions)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
