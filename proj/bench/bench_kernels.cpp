// Serial reference kernels against the OpenMP ones.
//   ./bench_kernels --benchmark_filter=Sieve
// OMP_NUM_THREADS controls the team size of the parallel variants.

#include <benchmark/benchmark.h>

#include "phisum/arith.h"
#include "phisum/floor_sums.h"
#include "phisum/prime_count.h"
#include "phisum/reference.h"
#include "phisum/sieves.h"

namespace {

const phisum::SieveTables& tables_1e7() {
    static const phisum::SieveTables t = phisum::build_sieves(10'000'000);
    return t;
}

void BM_SieveLinearReference(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(phisum::reference::linear_sieve(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SieveLinearReference)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_SieveSegmentedSerial(benchmark::State& state) {
    phisum::SieveOptions opt;
    opt.parallel = false;
    for (auto _ : state) benchmark::DoNotOptimize(phisum::build_sieves(static_cast<std::uint64_t>(state.range(0)), opt));
}
BENCHMARK(BM_SieveSegmentedSerial)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_SieveSegmentedParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(phisum::build_sieves(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SieveSegmentedParallel)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_NaiveSumReference(benchmark::State& state) {
    const auto& t = tables_1e7();
    for (auto _ : state)
        benchmark::DoNotOptimize(phisum::reference::sum_phi_floor_primes_serial({state.range(0), 0}, t));
}
BENCHMARK(BM_NaiveSumReference)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

void BM_NaiveSumParallel(benchmark::State& state) {
    const auto& t = tables_1e7();
    for (auto _ : state) benchmark::DoNotOptimize(phisum::sum_phi_floor_primes_naive({state.range(0), 0}, t));
}
BENCHMARK(BM_NaiveSumParallel)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

// Counter build plus the blocked reduction, as the CLI runs it.
void BM_BlockedSum(benchmark::State& state) {
    const std::int64_t x = state.range(0);
    const auto tables = phisum::build_sieves(phisum::isqrt(static_cast<std::uint64_t>(x)));
    for (auto _ : state) {
        const auto counter = phisum::build_prime_counter(x);
        benchmark::DoNotOptimize(
            phisum::sum_phi_floor_primes_blocked({x, 0, phisum::Algorithm::blocked}, tables, counter));
    }
}
BENCHMARK(BM_BlockedSum)->Arg(1'000'000)->Arg(10'000'000)->Arg(1'000'000'000)->Unit(benchmark::kMillisecond);

void BM_IntegerSumReference(benchmark::State& state) {
    const auto& t = tables_1e7();
    for (auto _ : state) benchmark::DoNotOptimize(phisum::reference::sum_phi_floor_integers_direct(state.range(0), t));
}
BENCHMARK(BM_IntegerSumReference)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

void BM_IntegerSumBlocked(benchmark::State& state) {
    const auto& t = tables_1e7();
    for (auto _ : state) benchmark::DoNotOptimize(phisum::sum_phi_floor_integers(state.range(0), t));
}
BENCHMARK(BM_IntegerSumBlocked)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
