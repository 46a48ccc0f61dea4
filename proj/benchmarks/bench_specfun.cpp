#include <benchmark/benchmark.h>

#include "rispla/specfun.hpp"

namespace {

void BM_QInv(benchmark::State& state) {
  double p = 1e-8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rispla::specfun::q_inv(p));
    p = p < 0.5 ? p * 1.7 : 1e-8;
  }
}
BENCHMARK(BM_QInv);

void BM_FoldedNormalCdf(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rispla::specfun::folded_normal_cdf(x, {2.0, 1.0}));
    x = x < 10.0 ? x + 0.01 : 0.0;
  }
}
BENCHMARK(BM_FoldedNormalCdf);

}  // namespace
