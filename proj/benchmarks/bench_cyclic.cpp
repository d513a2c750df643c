#include <benchmark/benchmark.h>

#include <olymp/cyclic/solver.hpp>
#include <olymp/cyclic/system.hpp>
#include <olymp/rng.hpp>

#include <vector>

namespace {

olymp::cyclic::Assignment random_start(int n, std::uint64_t seed) {
    olymp::Rng rng(seed);
    std::vector<double> values(static_cast<std::size_t>(2 * n));
    for (auto& v : values) {
        v = rng.uniform(0.5, 3.0);
    }
    return {n, std::move(values)};
}

void BM_CyclicResidual(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_start(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(olymp::cyclic::residual_sup_norm(x));
    }
}
BENCHMARK(BM_CyclicResidual)->Arg(8)->Arg(64)->Arg(256);

void BM_CyclicJacobian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_start(n, 4);
    for (auto _ : state) {
        const auto jac = olymp::cyclic::jacobian(x);
        benchmark::DoNotOptimize(jac.size());
    }
}
BENCHMARK(BM_CyclicJacobian)->Arg(8)->Arg(64);

void BM_CyclicSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto result = olymp::cyclic::solve(n, random_start(n, 4));
        benchmark::DoNotOptimize(result.residual);
    }
}
BENCHMARK(BM_CyclicSolve)->Arg(4)->Arg(8)->Arg(32);

}  // namespace
