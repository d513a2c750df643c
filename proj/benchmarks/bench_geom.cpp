#include <benchmark/benchmark.h>

#include <olymp/geom/hexagon.hpp>
#include <olymp/geom/rectangles.hpp>
#include <olymp/rng.hpp>

namespace {

void BM_RectangleSampleAndVerify(benchmark::State& state) {
    olymp::Rng rng(5);
    for (auto _ : state) {
        const auto cfg = olymp::geom::sample_config(rng);
        const auto report = olymp::geom::verify_concurrency(cfg, 1e-7);
        benchmark::DoNotOptimize(report.spread);
    }
}
BENCHMARK(BM_RectangleSampleAndVerify);

void BM_HexagonSampleAndVerify(benchmark::State& state) {
    olymp::Rng rng(5);
    for (auto _ : state) {
        const auto hex = olymp::geom::sample_hexagon(rng);
        const auto report = olymp::geom::verify_hexagon(hex, 1e-7);
        benchmark::DoNotOptimize(report.midpoint_deviation);
    }
}
BENCHMARK(BM_HexagonSampleAndVerify);

}  // namespace
