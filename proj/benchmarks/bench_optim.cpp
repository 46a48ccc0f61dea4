#include <benchmark/benchmark.h>

#include "rispla/auth.hpp"
#include "rispla/optim.hpp"

namespace {

using namespace rispla;

channel::Scenario table1() {
  channel::Scenario s;
  s.alice_pos = {100, 100, 1};
  s.eve_pos = {90, 100, 1};
  s.ris_pos = {90, 90, 1};
  s.bob_pos = {90, 80, 1};
  s.tx_gain = s.rx_gain = 1000;
  s.lq_db = 80;
  return s;
}

void BM_GradientGridSearch(benchmark::State& state) {
  const auto s = table1();
  const auto grid = optim::default_gradient_grid(s, static_cast<std::size_t>(state.range(0)));
  const double eps = auth::threshold_for_pfa(0.01, s.noise_sigma());
  for (auto _ : state) benchmark::DoNotOptimize(optim::optimize_gradient(s, eps, grid));
}
BENCHMARK(BM_GradientGridSearch)->Arg(10'000);

void BM_CoordinateDescentN8(benchmark::State& state) {
  auto s = table1();
  s.n_elements = 8;
  s.lq_db = 10;
  optim::PhaseSearch search;
  search.eval_trials = 2'000;
  search.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(optim::optimize_phase_matrix(s, 2.0, search));
}
BENCHMARK(BM_CoordinateDescentN8)->Unit(benchmark::kMillisecond);

}  // namespace
