#include <benchmark/benchmark.h>

#include "dsurf/sweep.hpp"

namespace {

using namespace dsurf;

std::vector<RingSpec> corpus() {
    std::vector<RingSpec> c;
    for (unsigned n : {2u, 3u})
        for (const auto& s : reduced_specs(FieldSpec::prime(3), n)) c.push_back(s);
    return c;
}

std::vector<GridPoint> grid() {
    return cancellation_grid({FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)},
                             {{2, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 8}});
}

void BM_IsoSweepSerial(benchmark::State& st) {
    const auto c = corpus();
    for (auto _ : st) benchmark::DoNotOptimize(iso_sweep_serial(c));
}
void BM_IsoSweepParallel(benchmark::State& st) {
    const auto c = corpus();
    for (auto _ : st) benchmark::DoNotOptimize(iso_sweep_parallel(c));
}
void BM_CancellationSerial(benchmark::State& st) {
    const auto g = grid();
    for (auto _ : st) benchmark::DoNotOptimize(cancellation_sweep_serial(g));
}
void BM_CancellationParallel(benchmark::State& st) {
    const auto g = grid();
    for (auto _ : st) benchmark::DoNotOptimize(cancellation_sweep_parallel(g));
}

BENCHMARK(BM_IsoSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsoSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CancellationSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CancellationParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
