#include <benchmark/benchmark.h>

#include "linfty/random.hpp"
#include "linfty/tensor.hpp"
#include "linfty/unimodular.hpp"

using namespace linfty;

namespace {

SpacePtr bench_space(int even, int odd) {
  std::vector<Generator> g;
  for (int i = 0; i < even; ++i) g.push_back({"e" + std::to_string(i), Parity::Even});
  for (int i = 0; i < odd; ++i) g.push_back({"o" + std::to_string(i), Parity::Odd});
  return make_space(std::move(g));
}

void BM_Bracket(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler rng(7);
  auto s = bench_space(2, 2);
  auto a = rng.derivation(s, Parity::Odd, 1, 3, n, 0.4);
  auto b = rng.derivation(s, Parity::Even, 1, 3, n, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(a, b));
}
BENCHMARK(BM_Bracket)->DenseRange(4, 8, 2);

void BM_Divergence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler rng(11);
  auto s = bench_space(2, 2);
  auto xi = rng.derivation(s, Parity::Odd, 1, n, n, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(divergence(xi));
}
BENCHMARK(BM_Divergence)->DenseRange(4, 8, 2);

void BM_CeSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = from_lie(lie::sl2(), n);
  for (auto _ : state) benchmark::DoNotOptimize(obstruction_class(s));
}
BENCHMARK(BM_CeSolve)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_Tensor(benchmark::State& state) {
  auto s = from_lie(lie::sl2(), 4);
  auto a = frobenius::by_name(frobenius::names().at(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_linfty(a, s));
  state.SetLabel(frobenius::names().at(state.range(0)));
}
BENCHMARK(BM_Tensor)->DenseRange(0, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
