#include <benchmark/benchmark.h>

#include <olymp/park/layout.hpp>
#include <olymp/park/search.hpp>
#include <olymp/park/walk.hpp>
#include <olymp/rng.hpp>

namespace {

olymp::park::ParkLayout prism() {
    olymp::park::ParkLayout layout;
    layout.junction_count = 6;
    layout.trails = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
    layout.rotation = {
        {{0, 6, 2}}, {{1, 7, 0}}, {{2, 8, 1}}, {{6, 3, 5}}, {{4, 3, 7}}, {{5, 4, 8}},
    };
    return layout;
}

void BM_ParkSimulate(benchmark::State& state) {
    const auto layout = prism();
    for (auto _ : state) {
        const auto walk = olymp::park::simulate(layout, 0, 0, olymp::park::Turn::kLeft);
        benchmark::DoNotOptimize(walk.steps.size());
    }
}
BENCHMARK(BM_ParkSimulate);

void BM_ParkRandomLayout(benchmark::State& state) {
    const int junctions = static_cast<int>(state.range(0));
    olymp::Rng rng(9);
    for (auto _ : state) {
        const auto layout = olymp::park::random_cubic_layout(junctions, rng);
        benchmark::DoNotOptimize(layout.trail_count());
    }
}
BENCHMARK(BM_ParkRandomLayout)->Arg(6)->Arg(10)->Arg(14);

void BM_ParkFuzzWalks(benchmark::State& state) {
    const int layouts = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto report = olymp::park::fuzz_walks(layouts, 12, 3);
        benchmark::DoNotOptimize(report.max_visit_count);
    }
}
BENCHMARK(BM_ParkFuzzWalks)->Arg(10)->Arg(50);

void BM_ParkSearchExtremal(benchmark::State& state) {
    for (auto _ : state) {
        const auto result = olymp::park::search_extremal(10, static_cast<int>(state.range(0)), 7);
        benchmark::DoNotOptimize(result.best_count);
    }
}
BENCHMARK(BM_ParkSearchExtremal)->Arg(20)->Arg(100);

}  // namespace
