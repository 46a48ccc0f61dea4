#include <benchmark/benchmark.h>

#include "rispla/mc.hpp"

namespace {

using namespace rispla;

void BM_PathlossTrials(benchmark::State& state) {
  const auto model = mc::TrialModel::pathloss(1.0, 3.0, 1.0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc::run_trials(model, n, 7, 1.96, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PathlossTrials)->Arg(100'000);

void BM_CirRefadeTrials(benchmark::State& state) {
  mc::TrialPlan plan;
  plan.feature = mc::Feature::CirPhase;
  plan.fading = mc::Fading::Refade;
  plan.scenario.alice_pos = {100, 100, 1};
  plan.scenario.eve_pos = {90, 100, 1};
  plan.scenario.ris_pos = {90, 90, 1};
  plan.scenario.bob_pos = {90, 80, 1};
  plan.scenario.n_elements = static_cast<std::size_t>(state.range(0));
  plan.profile = channel::PhaseProfile::zeros(plan.scenario.n_elements);
  plan.epsilon = 0.5;
  plan.workers = 1;
  const auto model = mc::TrialModel::from_plan(plan);
  for (auto _ : state) benchmark::DoNotOptimize(mc::run_trials(model, 10'000, 7, plan.epsilon, 1));
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_CirRefadeTrials)->Arg(8)->Arg(256);

void BM_SubstreamDerivation(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto s = rng::Stream::substream(42, i++);
    benchmark::DoNotOptimize(s());
  }
}
BENCHMARK(BM_SubstreamDerivation);

}  // namespace
