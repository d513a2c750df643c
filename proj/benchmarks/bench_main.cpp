#include <benchmark/benchmark.h>

// The packaged benchmark_main static library was compiled with a different
// toolchain and fails to link; an explicit main costs three lines.
BENCHMARK_MAIN();
