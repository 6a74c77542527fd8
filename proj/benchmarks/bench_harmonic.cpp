#include <benchmark/benchmark.h>

#include <Eigen/Core>

#include "hbu/growth.hpp"
#include "hbu/halfplane_construction.hpp"
#include "hbu/harmonic.hpp"

using namespace hbu::harmonic;

namespace {

const HalfPlaneConstruction& construction() {
  static const auto c = [] {
    ConstructionParams p;
    p.grid = 64;
    p.resolution_tol = 1.0;
    return HalfPlaneConstruction::build(p);
  }();
  return *c;
}

void BM_CauchyTransform(benchmark::State& state) {
  const auto& c = construction();
  const Complex z(0.01 * static_cast<double>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(c.f3(z));
}
BENCHMARK(BM_CauchyTransform)->Arg(1)->Arg(8)->Arg(50);

void BM_DirichletSolve(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    state.PauseTiming();
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n + 1, n + 1);
    v.row(0).setOnes();
    state.ResumeTiming();
    solve_dirichlet(v, 2.0 / static_cast<double>(n), 1.0 / static_cast<double>(n));
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_DirichletSolve)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ShapiroEnvelope(benchmark::State& state) {
  const auto u = HarmonicFunction::shapiro();
  const std::vector<double> grid = {0.9, 0.99, 0.999};
  for (auto _ : state) benchmark::DoNotOptimize(envelope(u, grid, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ShapiroEnvelope)->Arg(512)->Arg(2048);

}  // namespace
