#include <benchmark/benchmark.h>

#include <olymp/gcdsets/gcd_sets.hpp>

namespace {

void BM_GcdVerify(benchmark::State& state) {
    const auto set = olymp::gcdsets::construct(4, {2, 5, 11, 17}, {3, 7, 13, 19});
    for (auto _ : state) {
        const auto report = olymp::gcdsets::verify_property(set);
        benchmark::DoNotOptimize(report.holds);
    }
}
BENCHMARK(BM_GcdVerify);

void BM_GcdConstruct(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const std::vector<olymp::gcdsets::Element> p{2, 5, 11, 17, 23, 31};
    const std::vector<olymp::gcdsets::Element> q{3, 7, 13, 19, 29, 37};
    for (auto _ : state) {
        const auto set = olymp::gcdsets::construct(k, {p.begin(), p.begin() + k},
                                                   {q.begin(), q.begin() + k});
        benchmark::DoNotOptimize(set.size());
    }
}
BENCHMARK(BM_GcdConstruct)->Arg(2)->Arg(4)->Arg(6);

void BM_GcdSearch(benchmark::State& state) {
    const auto bound = static_cast<olymp::gcdsets::Element>(state.range(0));
    for (auto _ : state) {
        const auto report = olymp::gcdsets::search_sizes(bound, 4);
        benchmark::DoNotOptimize(report.nodes_explored);
    }
}
BENCHMARK(BM_GcdSearch)->Arg(100)->Arg(200)->Arg(400);

}  // namespace
