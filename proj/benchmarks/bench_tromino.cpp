#include <benchmark/benchmark.h>

#include <olymp/tromino/board.hpp>
#include <olymp/tromino/certificate.hpp>
#include <olymp/tromino/game.hpp>

namespace {

void BM_TrominoConstructive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto moves = olymp::tromino::constructive_clear(n);
        benchmark::DoNotOptimize(moves.size());
    }
}
BENCHMARK(BM_TrominoConstructive)->Arg(3)->Arg(12)->Arg(30);

void BM_TrominoReplay(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto moves = olymp::tromino::constructive_clear(n);
    for (auto _ : state) {
        const auto board = olymp::tromino::replay(n, moves);
        benchmark::DoNotOptimize(board.stone_count());
    }
}
BENCHMARK(BM_TrominoReplay)->Arg(3)->Arg(12)->Arg(30);

void BM_TrominoSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto outcome = olymp::tromino::exhaustive_search(n);
        benchmark::DoNotOptimize(outcome.states_explored);
    }
}
BENCHMARK(BM_TrominoSearch)->Arg(2)->Arg(3)->Arg(4);

void BM_TrominoSearchThreads(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto outcome = olymp::tromino::exhaustive_search(4, 10'000'000, threads);
        benchmark::DoNotOptimize(outcome.states_explored);
    }
}
BENCHMARK(BM_TrominoSearchThreads)->Arg(1)->Arg(2)->Arg(4);

void BM_TrominoCertify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto moves = olymp::tromino::constructive_clear(n);
    for (auto _ : state) {
        const auto report = olymp::tromino::tally_and_certify(n, moves);
        benchmark::DoNotOptimize(report.divisibility_certified);
    }
}
BENCHMARK(BM_TrominoCertify)->Arg(3)->Arg(6)->Arg(12);

}  // namespace
