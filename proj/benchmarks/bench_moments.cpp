#include <benchmark/benchmark.h>

#include <vector>

#include "gpm/coefficients.hpp"
#include "gpm/evaluator.hpp"
#include "gpm/oracles.hpp"
#include "gpm/support.hpp"

using namespace gpm;

namespace {

MultiIndex cube_index(int n, int e) { return MultiIndex(std::vector<int>(n, e)); }

GaussianSpec dense_spec(int n) {
  std::vector<std::vector<Rational>> cov(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(1, i + j + 1);
  return GaussianSpec(std::vector<Rational>(static_cast<std::size_t>(n), Rational(3, 2)), cov);
}

void bm_enumerate(benchmark::State& state) {
  MultiIndex a = cube_index(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    long count = 0;
    SupportIterator it(a);
    while (it.advance()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_enumerate)->Args({3, 3})->Args({4, 3})->Args({4, 4});

void bm_coefficient_closed(benchmark::State& state) {
  MultiIndex a = cube_index(4, 3);
  std::vector<PairExponentMatrix> support;
  for (const PairExponentMatrix& l : enumerate_support(a)) support.push_back(l);
  for (auto _ : state) {
    for (const PairExponentMatrix& l : support)
      benchmark::DoNotOptimize(coefficient_closed_form(a, l));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(support.size()));
}
BENCHMARK(bm_coefficient_closed);

void bm_coefficient_recursive(benchmark::State& state) {
  MultiIndex a = cube_index(4, 3);
  std::vector<PairExponentMatrix> support;
  for (const PairExponentMatrix& l : enumerate_support(a)) support.push_back(l);
  for (auto _ : state) {
    for (const PairExponentMatrix& l : support)
      benchmark::DoNotOptimize(coefficient_recursive(a, l));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(support.size()));
}
BENCHMARK(bm_coefficient_recursive);

void bm_moment_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MultiIndex a = cube_index(n, 3);
  GaussianSpec spec = dense_spec(n);
  for (auto _ : state) benchmark::DoNotOptimize(moment_exact(a, spec));
}
BENCHMARK(bm_moment_exact)->Arg(3)->Arg(4);

void bm_moment_float(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MultiIndex a = cube_index(n, 3);
  GaussianSpec spec = dense_spec(n);
  for (auto _ : state) benchmark::DoNotOptimize(moment(a, spec, NumericMode::floating));
}
BENCHMARK(bm_moment_float)->Arg(3)->Arg(4);

void bm_stein(benchmark::State& state) {
  MultiIndex a = cube_index(3, 3);
  GaussianSpec spec = dense_spec(3);
  for (auto _ : state) benchmark::DoNotOptimize(stein_moment(a, spec));
}
BENCHMARK(bm_stein);

}  // namespace

BENCHMARK_MAIN();
