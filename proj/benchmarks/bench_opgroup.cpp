#include <benchmark/benchmark.h>

#include "hbu/operator_group.hpp"

using namespace hbu::opgroup;

namespace {

MatrixGenerator generator(int blocks) {
  std::vector<JordanBlockSpec> spec;
  for (int b = 0; b < blocks; ++b) spec.push_back({0.5 * b, b % 3 + 1});
  return MatrixGenerator::from_jordan(spec, 7);
}

void BM_GroupAt(benchmark::State& state) {
  const auto G = generator(static_cast<int>(state.range(0)));
  double t = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(group_at(G, t += 0.1));
}
BENCHMARK(BM_GroupAt)->Arg(2)->Arg(4);

void BM_DOp(benchmark::State& state) {
  const auto G = generator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(D_op(G, 1e-3, 0.25));
}
BENCHMARK(BM_DOp)->Arg(2)->Arg(4);

void BM_FromMatrix(benchmark::State& state) {
  const CMatrix A = generator(static_cast<int>(state.range(0))).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGenerator::from_matrix(A));
}
BENCHMARK(BM_FromMatrix)->Arg(2)->Arg(4);

}  // namespace
