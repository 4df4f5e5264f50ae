#include <benchmark/benchmark.h>

#include "hypergroup/algebra.hpp"
#include "hypergroup/freegroup.hpp"
#include "hypergroup/orthopoly.hpp"
#include "hypergroup/transform.hpp"

using namespace hypergroup;

namespace {

const Param quarter(Rational(1, 4));

void BM_MulBasisRecursive(benchmark::State& state) {
  const auto n = static_cast<algebra::Degree>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(algebra::mul_basis_recursive(n, n, quarter, nullptr));
}
BENCHMARK(BM_MulBasisRecursive)->RangeMultiplier(2)->Range(8, 128);

void BM_MulBasisClosed(benchmark::State& state) {
  const auto n = static_cast<algebra::Degree>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(algebra::mul_basis_closed(n, n, quarter));
}
BENCHMARK(BM_MulBasisClosed)->RangeMultiplier(2)->Range(8, 128);

void BM_EvalP(benchmark::State& state) {
  const auto n = static_cast<algebra::Degree>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orthopoly::eval_P(n, 0.3, quarter));
}
BENCHMARK(BM_EvalP)->Arg(20)->Arg(200);

void BM_StieltjesDensity(benchmark::State& state) {
  const auto phi = spectra::FunctionalSpec::geometric(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(transform::stieltjes_density(phi, quarter, 0.3));
}
BENCHMARK(BM_StieltjesDensity);

void BM_Invert200(benchmark::State& state) {
  const auto phi = spectra::FunctionalSpec::geometric(1.5);
  const auto grid = transform::interior_grid(quarter, 200);
  for (auto _ : state) benchmark::DoNotOptimize(transform::invert(phi, quarter, grid));
}
BENCHMARK(BM_Invert200)->Unit(benchmark::kMillisecond);

void BM_RadialConvolve(benchmark::State& state) {
  const auto n = static_cast<algebra::Degree>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(freegroup::radial_convolve(n, n, 2));
}
BENCHMARK(BM_RadialConvolve)->DenseRange(1, 4);

void BM_HaagerupGram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(freegroup::haagerup_gram(1.5, 2, 3));
}
BENCHMARK(BM_HaagerupGram)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
