#include <benchmark/benchmark.h>

#include "farswarm/dynamics.hpp"
#include "farswarm/init.hpp"
#include "farswarm/queries.hpp"

using namespace farswarm;

namespace {

SwarmState disc_state(int n) {
    return generate(make_init_spec(GeometryKind::Disc, n, 1.0, 42), 0.02, Rule::farthest());
}

// one full timestep of farthest queries, O(N^2) oracle path
void BM_FarthestBruteStep(benchmark::State& state) {
    const SwarmState s = disc_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i < s.count(); ++i) acc += farthest_brute(s.positions, i).dist_sq;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * s.count());
}

// the production path: hull rebuild plus O(h) per query
void BM_FarthestHullStep(benchmark::State& state) {
    const SwarmState s = disc_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const HullIndex hull = build_hull(s.positions, 2);
        double acc = 0.0;
        for (int i = 0; i < s.count(); ++i) acc += farthest_fast(hull, s.positions, i).dist_sq;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * s.count());
}

void BM_HullBuild(benchmark::State& state) {
    const SwarmState s = disc_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const HullIndex hull = build_hull(s.positions, 2);
        benchmark::DoNotOptimize(hull.vertices.data());
    }
}

// a complete dynamics step: targets, tie-breaks, moves
void BM_Advance(benchmark::State& state) {
    const SwarmState s = disc_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const SwarmState next = advance(s);
        benchmark::DoNotOptimize(next.positions.data());
    }
}

void BM_NearestStep(benchmark::State& state) {
    SwarmState s = disc_state(static_cast<int>(state.range(0)));
    s.rule = Rule::nearest(0.02);
    for (auto _ : state) {
        const SwarmState next = advance(s);
        benchmark::DoNotOptimize(next.positions.data());
    }
}

}  // namespace

BENCHMARK(BM_FarthestBruteStep)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FarthestHullStep)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HullBuild)->Arg(1000)->Arg(5000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Advance)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestStep)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
