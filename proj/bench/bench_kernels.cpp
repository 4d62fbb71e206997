#include <benchmark/benchmark.h>

#include "zmcenter/aut.hpp"
#include "zmcenter/kernels.hpp"
#include "zmcenter/zm.hpp"

namespace {

using namespace zmcenter;

const ZmTriple& triple_for(int which) {
  static const ZmTriple small = ZmTriple::validate(5, 16, 2);
  static const ZmTriple medium = ZmTriple::validate(5, 48, 2);
  static const ZmTriple large = ZmTriple::validate(31, 45, 2);
  return which == 0 ? small : which == 1 ? medium : large;
}

void BM_ZmFixedPointsSerial(benchmark::State& state) {
  const auto& t = triple_for(static_cast<int>(state.range(0)));
  const auto auts = aut::enumerate_family(t, AutFamily::all);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::zm_fixed_points_serial(t, auts));
}

void BM_ZmFixedPointsParallel(benchmark::State& state) {
  const auto& t = triple_for(static_cast<int>(state.range(0)));
  const auto auts = aut::enumerate_family(t, AutFamily::all);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::zm_fixed_points_parallel(t, auts));
}

void BM_AutomorphismsSerial(benchmark::State& state) {
  const auto g = zm::cayley(triple_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::automorphisms_serial(g));
}

void BM_AutomorphismsParallel(benchmark::State& state) {
  const auto g = zm::cayley(triple_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::automorphisms_parallel(g));
}

void BM_FixedPointsSerial(benchmark::State& state) {
  const auto g = zm::cayley(triple_for(static_cast<int>(state.range(0))));
  const auto auts = kernels::automorphisms_parallel(g);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fixed_points_serial(auts, g.order()));
}

void BM_FixedPointsParallel(benchmark::State& state) {
  const auto g = zm::cayley(triple_for(static_cast<int>(state.range(0))));
  const auto auts = kernels::automorphisms_parallel(g);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fixed_points_parallel(auts, g.order()));
}

}  // namespace

BENCHMARK(BM_ZmFixedPointsSerial)->DenseRange(0, 2);
BENCHMARK(BM_ZmFixedPointsParallel)->DenseRange(0, 2);
BENCHMARK(BM_AutomorphismsSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutomorphismsParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedPointsSerial)->DenseRange(0, 1);
BENCHMARK(BM_FixedPointsParallel)->DenseRange(0, 1);

BENCHMARK_MAIN();
