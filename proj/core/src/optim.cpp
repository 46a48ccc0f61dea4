#include "rispla/optim.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rispla/channel.hpp"
#include "rispla/errors.hpp"
#include "rispla/parallel.hpp"

namespace rispla::optim {

using std::numbers::pi;

OptResult optimize_gradient(const channel::Scenario& scenario, double epsilon, std::span<const double> grid) {
  if (grid.empty()) throw ContractError("optimize_gradient: empty grid");
  const double sigma = scenario.noise_sigma();

  OptResult result;
  result.trace.reserve(grid.size());
  bool found = false;
  for (double gradient : grid) {
    double pl_a = 0.0;
    double pl_e = 0.0;
    try {
      pl_a = channel::ris_pathloss(scenario, scenario.alice_pos, gradient);
      pl_e = channel::ris_pathloss(scenario, scenario.eve_pos, gradient);
    } catch (const EvanescentError&) {
      result.skipped.push_back(gradient);
      continue;
    }
    const double pmd = auth::pmd_pathloss(epsilon, sigma, pl_a, pl_e);
    ++result.evaluations;
    result.trace.push_back({0.0, gradient, pmd});
    if (!found || pmd < result.best_pmd) {
      result.best_pmd = pmd;
      result.best_profile = channel::PhaseProfile::gradient(gradient);
      found = true;
    }
  }
  if (!found) throw InfeasibleError("optimize_gradient: every grid point is evanescent");
  return result;
}

double gradient_null_spacing(const channel::Scenario& scenario) {
  return 2.0 * pi * scenario.refractive_index / scenario.element_b;
}

std::vector<double> default_gradient_grid(const channel::Scenario& scenario, std::size_t points, double spans) {
  if (points < 2) throw ContractError("gradient grid needs at least two points");
  const double half = spans * gradient_null_spacing(scenario);
  std::vector<double> grid(points);
  const double step = 2.0 * half / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = -half + step * static_cast<double>(i);
  return grid;
}

std::vector<ZeroRun> near_zero_minima(std::span<const TracePoint> trace, double threshold) {
  std::vector<ZeroRun> runs;
  std::size_t i = 0;
  while (i < trace.size()) {
    if (!(trace[i].pmd < threshold)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < trace.size() && trace[j + 1].pmd < threshold) ++j;
    runs.push_back({i, j, 0.5 * (trace[i].value + trace[j].value)});
    i = j + 1;
  }
  return runs;
}

channel::PhaseProfile profile_from_levels(std::span<const std::size_t> index, std::size_t levels) {
  std::vector<double> phases(index.size());
  for (std::size_t n = 0; n < index.size(); ++n) {
    phases[n] = 2.0 * pi * static_cast<double>(index[n]) / static_cast<double>(levels);
  }
  return channel::PhaseProfile::per_element(std::move(phases));
}

namespace {

class PhaseObjective {
 public:
  PhaseObjective(const channel::Scenario& scenario, double epsilon, const PhaseSearch& search)
      : channels_(mc::enrollment_channels(scenario, search.channel_seed)),
        sigma_(scenario.noise_sigma()),
        epsilon_(epsilon),
        search_(search) {}

  double operator()(const channel::PhaseProfile& profile, unsigned workers) const {
    const auto model = mc::TrialModel::cir(mc::Feature::CirPhase, channel::cascaded_gain(channels_.alice, profile),
                                           channel::cascaded_gain(channels_.eve, profile), sigma_, search_.wrap);
    return mc::conditional_error(model, mc::Hypothesis::H1, search_.eval_trials, search_.seed, epsilon_, workers)
        .value;
  }

 private:
  mc::EnrollmentChannels channels_;
  double sigma_;
  double epsilon_;
  PhaseSearch search_;
};

void check_search(const channel::Scenario& scenario, const PhaseSearch& search) {
  scenario.validate();
  if (search.levels < 2) throw ContractError("phase search needs at least two levels");
  if (search.eval_trials == 0) throw ContractError("phase search needs at least one evaluation trial");
}

OptResult exhaustive(const channel::Scenario& scenario, double epsilon, const PhaseSearch& search) {
  const std::size_t n = scenario.n_elements;
  const double required = std::pow(static_cast<double>(search.levels), static_cast<double>(n));
  if (required > kExhaustiveGuard) {
    throw BudgetError("exhaustive phase search needs " + std::to_string(required) +
                          " evaluations, above the guard of 1e6; use coordinate descent",
                      required);
  }
  const auto total = static_cast<std::uint64_t>(std::llround(required));
  const PhaseObjective objective(scenario, epsilon, search);

  auto digits = [&](std::uint64_t k) {
    std::vector<std::size_t> index(n);
    for (std::size_t e = 0; e < n; ++e) {
      index[e] = static_cast<std::size_t>(k % search.levels);
      k /= search.levels;
    }
    return index;
  };

  std::vector<double> pmd(total);
  parallel_chunks(total, search.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) pmd[k] = objective(profile_from_levels(digits(k), search.levels), 1);
  });

  OptResult result;
  result.evaluations = total;
  result.trace.reserve(total);
  std::uint64_t best = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    result.trace.push_back({0.0, static_cast<double>(k), pmd[k]});
    if (pmd[k] < pmd[best]) best = k;
  }
  result.best_pmd = pmd[best];
  result.best_profile = profile_from_levels(digits(best), search.levels);
  return result;
}

OptResult coordinate(const channel::Scenario& scenario, double epsilon, const PhaseSearch& search) {
  const std::size_t n = scenario.n_elements;
  const std::size_t levels = search.levels;
  const PhaseObjective objective(scenario, epsilon, search);
  std::vector<std::size_t> index(n, 0);

  OptResult result;
  double current = std::numeric_limits<double>::infinity();
  bool budget_left = true;
  for (std::size_t pass = 0; pass < search.max_passes && budget_left; ++pass) {
    bool changed = false;
    bool swept = false;
    for (std::size_t e = 0; e < n; ++e) {
      if (search.max_evaluations != 0 && result.evaluations + levels > search.max_evaluations) {
        budget_left = false;
        break;
      }
      const std::size_t previous = index[e];
      std::size_t best_level = 0;
      double best_value = std::numeric_limits<double>::infinity();
      for (std::size_t level = 0; level < levels; ++level) {
        index[e] = level;
        const double value = objective(profile_from_levels(index, levels), search.workers);
        ++result.evaluations;
        result.trace.push_back({static_cast<double>(e + 1), 2.0 * pi * static_cast<double>(level) / levels, value});
        if (value < best_value) {
          best_value = value;
          best_level = level;
        }
      }
      // The sweep includes the current level, so the objective never increases.
      index[e] = best_level;
      changed = changed || best_level != previous;
      current = best_value;
      swept = true;
    }
    if (swept) result.pass_objectives.push_back(current);
    if (!changed) break;
  }
  if (result.evaluations == 0) throw InfeasibleError("coordinate descent budget allows no evaluation");
  result.best_pmd = current;
  result.best_profile = profile_from_levels(index, levels);
  return result;
}

}  // namespace

double phase_pmd(const channel::Scenario& scenario, double epsilon, const channel::PhaseProfile& profile,
                 const PhaseSearch& search, unsigned workers) {
  check_search(scenario, search);
  return PhaseObjective(scenario, epsilon, search)(profile, workers);
}

OptResult optimize_phase_matrix(const channel::Scenario& scenario, double epsilon, const PhaseSearch& search) {
  check_search(scenario, search);
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be nonnegative");
  return search.strategy == Strategy::Exhaustive ? exhaustive(scenario, epsilon, search)
                                                 : coordinate(scenario, epsilon, search);
}

}  // namespace rispla::optim
