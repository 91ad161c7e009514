#include <benchmark/benchmark.h>

#include "aszeta/curves.hpp"
#include "aszeta/formulas.hpp"
#include "aszeta/zeta.hpp"

using namespace aszeta;

namespace {

const CurveSpec kCurve = CurveSpec::ck(3, 2);

void BM_CountSerial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const FieldTower tower = build_tower(kCurve.p, n);
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= 3;
  for (auto _ : state) benchmark::DoNotOptimize(count_trace_zeros_serial(kCurve, tower, 0, size));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}

void BM_CountParallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const FieldTower tower = build_tower(kCurve.p, n);
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= 3;
  for (auto _ : state) benchmark::DoNotOptimize(count_trace_zeros_parallel(kCurve, tower, 0, size));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}

void BM_LPolyFromFormula(benchmark::State& state) {
  const CurveSpec spec = CurveSpec::ck(3, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpoly_of(spec));
}

}  // namespace

BENCHMARK(BM_CountSerial)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LPolyFromFormula)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
