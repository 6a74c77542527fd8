#include <benchmark/benchmark.h>

#include "hbu/potential.hpp"

using namespace hbu::potential;

namespace {

void BM_DomarCheck(benchmark::State& state) {
  const auto w = Majorant::power_law(1.0);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(domar_check(w, 20.0, K));
}
BENCHMARK(BM_DomarCheck)->Arg(64)->Arg(4096);

void BM_DomarMinimalT(benchmark::State& state) {
  const auto w = Majorant::power_law(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(domar_minimal_T(w));
}
BENCHMARK(BM_DomarMinimalT);

void BM_CarlemanBound(benchmark::State& state) {
  const auto beta = WidthFunction::canonical(10.0);
  for (auto _ : state) benchmark::DoNotOptimize(carleman_measure_bound(beta, std::exp(20.0), std::exp(30.0)));
}
BENCHMARK(BM_CarlemanBound);

}  // namespace
BENCHMARK_MAIN();
