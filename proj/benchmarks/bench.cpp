#include "blockspec/oracle.hpp"
#include "blockspec/sampler.hpp"
#include "blockspec/singularity.hpp"
#include "blockspec/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace blockspec;

static void SolveFixedPoint(benchmark::State& state) {
    StructureParams p(1, 2, 2);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeriesBundle b = solve_system(p, order, SolveMethod::FixedPoint);
        benchmark::DoNotOptimize(b.G[order - 1]);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SolveFixedPoint)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Complexity()
    ->Unit(benchmark::kMillisecond);

static void SolveNewton(benchmark::State& state) {
    StructureParams p(1, 2, 2);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeriesBundle b = solve_system(p, order, SolveMethod::Newton);
        benchmark::DoNotOptimize(b.G[order - 1]);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SolveNewton)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Arg(800)->Complexity()
    ->Unit(benchmark::kMillisecond);

static void SeriesMultiply(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), order);
    for (auto _ : state) {
        PowerSeries g2 = b.G * b.G;
        benchmark::DoNotOptimize(g2[order - 1]);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SeriesMultiply)->Arg(100)->Arg(200)->Arg(400)->Complexity()
    ->Unit(benchmark::kMillisecond);

static void EnumerateStructures(benchmark::State& state) {
    StructureParams p(1, 1, 2);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto st = enumerate_structures(n, p);
        benchmark::DoNotOptimize(st.count);
    }
}
BENCHMARK(EnumerateStructures)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void SingularityConstants(benchmark::State& state) {
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), 200);
    for (auto _ : state) {
        SingularityData d = analyze_singularity(b);
        benchmark::DoNotOptimize(d.alpha);
    }
}
BENCHMARK(SingularityConstants)->Unit(benchmark::kMillisecond);

static void ExactLongestLaw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), n + 1);
    for (auto _ : state) {
        Pmf law = longest_block_exact_dist(b, n);
        benchmark::DoNotOptimize(law.exact.back());
    }
}
BENCHMARK(ExactLongestLaw)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void SampleBlockSequences(benchmark::State& state) {
    SeriesBundle b = solve_system(StructureParams(1, 1, 2), 61);
    BlockSequenceSampler sampler(b, 60, 1);
    for (auto _ : state) {
        auto s = sampler.sample(60);
        benchmark::DoNotOptimize(s.blocks.size());
    }
}
BENCHMARK(SampleBlockSequences);

BENCHMARK_MAIN();
