#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "rispla/auth.hpp"
#include "rispla/channel.hpp"
#include "rispla/cli/experiment.hpp"
#include "rispla/mc.hpp"
#include "rispla/optim.hpp"
#include "rispla/specfun.hpp"

namespace rispla::cli {

namespace {

struct Check {
  std::string name;
  std::function<bool(std::ostream& detail)> body;
};

/// |empirical - analytical| <= 3 standard errors at the analytical value.
bool within_three_se(const mc::ErrorEstimate& e, double analytical) {
  return std::abs(e.value - analytical) <= 3.0 * e.standard_error(analytical);
}

}  // namespace

bool run_validation(const ExperimentSpec& spec, std::ostream& out) {
  channel::Scenario scenario;
  try {
    scenario = channel::load_scenario(spec.scenario_path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const std::uint64_t n = spec.n_trials;
  const std::uint64_t seed = spec.seed;
  const unsigned workers = spec.workers;
  const double sigma = scenario.noise_sigma();
  const double pl_a = channel::ris_pathloss(scenario, scenario.alice_pos, 0.0);
  const double pl_e = channel::ris_pathloss(scenario, scenario.eve_pos, 0.0);

  std::vector<Check> checks;

  checks.push_back({"pathloss PFA matches 2Q(eps/sigma)", [&](std::ostream& d) {
                      const auto model = mc::TrialModel::pathloss(pl_a, pl_e, sigma);
                      bool ok = true;
                      for (double k : {0.0, 0.5, 1.0, 2.0, 3.0}) {
                        const double eps = k * sigma;
                        const auto r = mc::run_trials(model, n, seed + 11 * static_cast<std::uint64_t>(k * 2), eps,
                                                      workers);
                        const double a = auth::pfa_pathloss(eps, sigma);
                        ok = ok && within_three_se(r.pfa, a);
                        d << " eps/sigma=" << k << ":" << r.pfa.value << "~" << a;
                      }
                      return ok;
                    }});

  checks.push_back({"Neyman-Pearson threshold round trip", [&](std::ostream& d) {
                      double worst = 0.0;
                      for (int i = 0; i <= 60; ++i) {
                        const double p = std::pow(10.0, -6.0 + 0.1 * i);
                        worst = std::max(worst, std::abs(auth::pfa_pathloss(auth::threshold_for_pfa(p, sigma),
                                                                            sigma) - p));
                      }
                      d << " max error " << worst;
                      return worst <= 1e-9;
                    }});

  checks.push_back({"pathloss PMD matches folded-normal CDF", [&](std::ostream& d) {
                      bool ok = true;
                      const double eps = auth::threshold_for_pfa(0.05, sigma);
                      for (double k : {0.5, 1.0, 2.0, 3.0, 4.0}) {
                        const auto model = mc::TrialModel::pathloss(pl_a, pl_a + k * sigma, sigma);
                        const auto r = mc::run_trials(model, n, seed + 101 + static_cast<std::uint64_t>(k * 2), eps,
                                                      workers);
                        const double a = auth::pmd_pathloss(eps, sigma, pl_a, pl_a + k * sigma);
                        ok = ok && within_three_se(r.pmd, a);
                        d << " delta/sigma=" << k << ":" << r.pmd.value << "~" << a;
                      }
                      return ok;
                    }});

  checks.push_back({"CIR magnitude H0 is Rayleigh", [&](std::ostream& d) {
                      const auto ch = mc::enrollment_channels(scenario, spec.channel_seed);
                      const auto profile = channel::PhaseProfile::zeros(scenario.n_elements);
                      const auto model = mc::TrialModel::cir(mc::Feature::CirMagnitude,
                                                             channel::cascaded_gain(ch.alice, profile),
                                                             channel::cascaded_gain(ch.eve, profile), sigma);
                      const auto sample = mc::empirical_distribution(model, mc::Hypothesis::H0, n, seed + 7, workers);
                      const double scale = auth::complex_noise_rayleigh_scale(sigma);
                      const double ks = mc::ks_distance(
                          sample, [&](double x) { return 1.0 - specfun::rayleigh_ccdf(std::max(0.0, x), scale); });
                      d << " KS " << ks;
                      return ks < 0.005;
                    }});

  checks.push_back({"RIS and non-RIS PFA agree", [&](std::ostream& d) {
                      const double eps = auth::threshold_for_pfa(0.05, sigma);
                      const auto ris = mc::run_trials(mc::TrialModel::pathloss(pl_a, pl_e, sigma), n, seed + 3, eps,
                                                      workers);
                      const auto direct = mc::run_trials(
                          mc::TrialModel::pathloss(channel::fspl(scenario.alice_pos, scenario.bob_pos, scenario),
                                                   channel::fspl(scenario.eve_pos, scenario.bob_pos, scenario), sigma),
                          n, seed + 4, eps, workers);
                      const double se = std::hypot(ris.pfa.standard_error(ris.pfa.value),
                                                   direct.pfa.standard_error(direct.pfa.value));
                      d << " ris " << ris.pfa.value << " non-ris " << direct.pfa.value;
                      return std::abs(ris.pfa.value - direct.pfa.value) <= 3.0 * se;
                    }});

  checks.push_back({"gradient search drives PMD to zero", [&](std::ostream& d) {
                      const double eps = auth::threshold_for_pfa(0.01, sigma);
                      const auto r = optim::optimize_gradient(scenario, eps, optim::default_gradient_grid(scenario));
                      d << " best pmd " << r.best_pmd << " at " << r.best_profile.gradient_value();
                      return r.best_pmd < 1e-6;
                    }});

  checks.push_back({"coordinate descent never beats exhaustive (N=2, L=4)", [&](std::ostream& d) {
                      auto small = scenario;
                      small.n_elements = 2;
                      optim::PhaseSearch search;
                      search.levels = 4;
                      search.eval_trials = std::min<std::uint64_t>(n, 10'000);
                      search.seed = seed;
                      search.channel_seed = spec.channel_seed;
                      search.workers = workers;
                      const double eps = std::numbers::pi / 2.0;
                      search.strategy = optim::Strategy::Exhaustive;
                      const auto ex = optim::optimize_phase_matrix(small, eps, search);
                      search.strategy = optim::Strategy::Coordinate;
                      const auto cd = optim::optimize_phase_matrix(small, eps, search);
                      d << " exhaustive " << ex.best_pmd << " coordinate " << cd.best_pmd;
                      return cd.best_pmd >= ex.best_pmd;
                    }});

  bool all = true;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = check.body(detail);
    } catch (const std::exception& e) {
      detail << " exception: " << e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    out << (ok ? "PASS " : "FAIL ") << check.name << " (" << took.count() << " s)" << detail.str() << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace rispla::cli
