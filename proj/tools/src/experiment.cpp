#include "rispla/cli/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "rispla/channel.hpp"
#include "rispla/cli/csv.hpp"
#include "rispla/errors.hpp"
#include "rispla/scenario.hpp"

namespace rispla::cli {

namespace {

bool is_sweep(Command c) { return c == Command::SweepPfa || c == Command::SweepPmd; }

std::filesystem::path with_suffix(const std::filesystem::path& path, const std::string& tag) {
  std::filesystem::path out = path;
  out.replace_filename(path.stem().string() + "." + tag + path.extension().string());
  return out;
}

channel::Scenario load(const ExperimentSpec& spec) {
  try {
    return channel::load_scenario(spec.scenario_path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

double single_lq(const ExperimentSpec& spec, const channel::Scenario& base) {
  if (spec.lq_grid_db.empty()) return base.lq_db;
  if (spec.lq_grid_db.size() != 1) throw UsageError("this command takes a single --lq value");
  return spec.lq_grid_db.front();
}

double resolve_threshold(const ExperimentSpec& spec, mc::Feature feature, double sigma) {
  if (spec.epsilon) return *spec.epsilon;
  const double p = spec.target_pfa.value_or(0.05);
  switch (feature) {
    case mc::Feature::Pathloss:
      return auth::threshold_for_pfa(p, sigma);
    case mc::Feature::CirMagnitude:
      return auth::threshold_for_pfa_cir_magnitude(p, auth::complex_noise_rayleigh_scale(sigma));
    case mc::Feature::CirPhase:
      break;
  }
  throw UsageError("--target-pfa has no closed-form threshold for the cir-phase feature; pass --epsilon");
}

std::vector<double> gradient_grid(const ExperimentSpec& spec, const channel::Scenario& s) {
  if (spec.grid_min || spec.grid_max) {
    if (!spec.grid_min || !spec.grid_max || !(*spec.grid_max > *spec.grid_min)) {
      throw UsageError("--grid-min and --grid-max must both be given with min < max");
    }
    std::vector<double> grid(spec.grid_points);
    const double step = (*spec.grid_max - *spec.grid_min) / static_cast<double>(spec.grid_points - 1);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = *spec.grid_min + step * static_cast<double>(i);
    return grid;
  }
  return optim::default_gradient_grid(s, spec.grid_points, spec.grid_spans);
}

optim::PhaseSearch phase_search(const ExperimentSpec& spec) {
  optim::PhaseSearch search;
  search.levels = spec.levels;
  search.strategy = spec.strategy;
  search.eval_trials = spec.eval_trials;
  search.seed = spec.seed;
  search.channel_seed = spec.channel_seed;
  search.max_passes = spec.max_passes;
  search.wrap = spec.wrap;
  search.workers = spec.workers;
  return search;
}

/// RIS configuration for one LQ point.
channel::PhaseProfile ris_profile(const ExperimentSpec& spec, const channel::Scenario& s, mc::Feature feature,
                                  double epsilon, bool optimize) {
  if (feature == mc::Feature::Pathloss) {
    if (spec.gradient) return channel::PhaseProfile::gradient(*spec.gradient);
    if (!optimize) return channel::PhaseProfile::gradient(0.0);
    return optim::optimize_gradient(s, epsilon, gradient_grid(spec, s)).best_profile;
  }
  if (!spec.phases.empty()) {
    if (spec.phases.size() != s.n_elements) throw UsageError("--phases needs one value per RIS element");
    return channel::PhaseProfile::per_element(spec.phases);
  }
  if (!optimize || feature == mc::Feature::CirMagnitude) return channel::PhaseProfile::zeros(s.n_elements);
  return optim::optimize_phase_matrix(s, epsilon, phase_search(spec)).best_profile;
}

mc::TrialPlan make_plan(const ExperimentSpec& spec, const channel::Scenario& s, double epsilon,
                        channel::PhaseProfile profile, mc::Link link) {
  mc::TrialPlan plan;
  plan.n_trials = spec.n_trials;
  plan.master_seed = spec.seed;
  plan.feature = spec.feature;
  plan.epsilon = epsilon;
  plan.scenario = s;
  plan.profile = std::move(profile);
  plan.link = link;
  plan.fading = spec.fading;
  plan.wrap = spec.wrap;
  plan.channel_seed = spec.channel_seed;
  plan.workers = spec.workers;
  return plan;
}

channel::PhaseProfile profile_for(const ExperimentSpec& spec, const channel::Scenario& s, double epsilon,
                                  mc::Link link, bool optimize) {
  if (link == mc::Link::Ris) return ris_profile(spec, s, spec.feature, epsilon, optimize);
  return spec.feature == mc::Feature::Pathloss ? channel::PhaseProfile::gradient(0.0)
                                               : channel::PhaseProfile::zeros(s.n_elements);
}

void warn_low_confidence(std::ostream& log, double lq, const mc::ErrorEstimate& e) {
  if (!e.valid()) {
    log << "warning: lq " << lq << " dB: no conditioning trials, estimate invalid\n";
  } else if (e.low_confidence()) {
    log << "warning: lq " << lq << " dB: only " << e.n_conditioning << " conditioning trials (low confidence)\n";
  }
}

void run_sweep(const ExperimentSpec& spec, std::ostream& log) {
  const auto base = load(spec);
  const auto lq_grid = spec.lq_grid_db.empty() ? default_lq_grid() : spec.lq_grid_db;
  const bool pfa = spec.command == Command::SweepPfa;
  const auto targets = output_targets(spec.output_path, spec.baseline);
  std::vector<std::vector<SweepRow>> rows(targets.size());

  for (double lq : lq_grid) {
    const auto s = base.with_lq_db(lq);
    const double sigma = s.noise_sigma();
    const double epsilon = resolve_threshold(spec, spec.feature, sigma);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const mc::Link link = targets[t].first;
      const auto plan = make_plan(spec, s, epsilon, profile_for(spec, s, epsilon, link, !pfa), link);
      const auto model = mc::TrialModel::from_plan(plan);
      const auto result = mc::run_trials(model, plan.n_trials, plan.master_seed, epsilon, plan.workers);

      std::optional<double> analytical;
      if (pfa) {
        if (spec.feature == mc::Feature::Pathloss) analytical = auth::pfa_pathloss(epsilon, sigma);
        if (spec.feature == mc::Feature::CirMagnitude) {
          analytical = auth::pfa_cir_magnitude(epsilon, auth::complex_noise_rayleigh_scale(sigma));
        }
      } else if (spec.feature == mc::Feature::Pathloss) {
        analytical = auth::pmd_pathloss(epsilon, sigma, model.frozen_value(mc::Transmitter::Alice).real(),
                                        model.frozen_value(mc::Transmitter::Eve).real());
      }
      const auto& estimate = pfa ? result.pfa : result.pmd;
      warn_low_confidence(log, lq, estimate);
      rows[t].push_back({lq, epsilon, analytical, estimate});
    }
  }
  for (std::size_t t = 0; t < targets.size(); ++t) write_file(targets[t].second, sweep_csv(rows[t]));
}

std::vector<double> log_grid_over(const std::vector<const mc::TrialStatistics*>& all, std::size_t points) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto* stats : all) {
    for (const auto* v : {&stats->alice, &stats->eve}) {
      const auto pos = std::upper_bound(v->begin(), v->end(), 0.0);
      if (pos != v->end()) lo = std::min(lo, *pos);
      if (!v->empty()) hi = std::max(hi, v->back());
    }
  }
  std::vector<double> grid{0.0};
  if (!(hi > 0.0)) {
    grid.push_back(1.0);
    return grid;
  }
  hi *= 1.0 + 1e-6;
  const std::size_t n = std::max<std::size_t>(points, 3) - 1;
  if (!(hi > lo)) lo = 0.5 * hi;
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = lo * std::exp(step * static_cast<double>(i));
    if (v > grid.back()) grid.push_back(v);
  }
  return grid;
}

void run_roc(const ExperimentSpec& spec, std::ostream&) {
  const auto base = load(spec);
  const auto s = base.with_lq_db(single_lq(spec, base));
  const double design = resolve_threshold(spec, spec.feature, s.noise_sigma());
  const auto targets = output_targets(spec.output_path, spec.baseline);

  std::vector<mc::TrialStatistics> stats;
  for (const auto& [link, _] : targets) {
    const auto plan = make_plan(spec, s, design, profile_for(spec, s, design, link, true), link);
    stats.push_back(mc::collect_statistics(mc::TrialModel::from_plan(plan), plan.n_trials, plan.master_seed,
                                           plan.workers));
  }
  std::vector<double> epsilons = spec.epsilons;
  if (epsilons.empty()) {
    std::vector<const mc::TrialStatistics*> all;
    for (const auto& st : stats) all.push_back(&st);
    epsilons = log_grid_over(all, spec.roc_points);
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    write_file(targets[t].second, roc_csv(mc::roc_from_statistics(stats[t], epsilons)));
  }
}

std::string join_phases(const channel::PhaseProfile& profile) {
  std::string out;
  for (double p : profile.phases()) {
    if (!out.empty()) out += ' ';
    out += format_number(p);
  }
  return out;
}

void run_optimize_gradient(const ExperimentSpec& spec, std::ostream& log) {
  const auto base = load(spec);
  const auto s = base.with_lq_db(single_lq(spec, base));
  const double epsilon = resolve_threshold(spec, mc::Feature::Pathloss, s.noise_sigma());
  const auto result = optim::optimize_gradient(s, epsilon, gradient_grid(spec, s));
  write_file(spec.output_path, trace_csv(result.trace));
  std::ostringstream summary;
  summary << "best_gradient,best_pmd,evaluations,skipped\n"
          << format_number(result.best_profile.gradient_value()) << ',' << format_number(result.best_pmd) << ','
          << result.evaluations << ',' << result.skipped.size() << '\n';
  write_file(with_suffix(spec.output_path, "summary"), summary.str());
  log << "best gradient " << result.best_profile.gradient_value() << " rad/m, pmd " << result.best_pmd << '\n';
}

void run_optimize_phases(const ExperimentSpec& spec, std::ostream& log) {
  const auto base = load(spec);
  const auto s = base.with_lq_db(single_lq(spec, base));
  const double epsilon = resolve_threshold(spec, mc::Feature::CirPhase, s.noise_sigma());
  const auto result = optim::optimize_phase_matrix(s, epsilon, phase_search(spec));
  write_file(spec.output_path, trace_csv(result.trace));
  std::ostringstream summary;
  summary << "strategy,best_pmd,evaluations,passes,best_phases\n"
          << (spec.strategy == optim::Strategy::Exhaustive ? "exhaustive" : "coordinate") << ','
          << format_number(result.best_pmd) << ',' << result.evaluations << ',' << result.pass_objectives.size()
          << ',' << join_phases(result.best_profile) << '\n';
  write_file(with_suffix(spec.output_path, "summary"), summary.str());
  log << "best pmd " << result.best_pmd << " after " << result.evaluations << " evaluations\n";
}

}  // namespace

std::vector<double> default_lq_grid() { return parse_grid("0:2:40"); }

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse grid '" + text + "'");
    }
    if (used != part.size() || !std::isfinite(v)) throw UsageError("cannot parse grid '" + text + "'");
    return v;
  };
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    parts.push_back(part);
  }
  std::vector<double> out;
  if (sep == ':') {
    if (parts.size() != 3) throw UsageError("range grid must be start:step:stop");
    const double start = number(parts[0]);
    const double step = number(parts[1]);
    const double stop = number(parts[2]);
    if (!(step > 0.0) || stop < start) throw UsageError("range grid needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + step * static_cast<double>(i));
  } else {
    for (const auto& p : parts) out.push_back(number(p));
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

std::vector<std::pair<mc::Link, std::filesystem::path>> output_targets(const std::filesystem::path& path,
                                                                      Baseline baseline) {
  switch (baseline) {
    case Baseline::Ris:
      return {{mc::Link::Ris, path}};
    case Baseline::NoRis:
      return {{mc::Link::Direct, path}};
    case Baseline::Both:
      break;
  }
  return {{mc::Link::Ris, with_suffix(path, "ris")}, {mc::Link::Direct, with_suffix(path, "noris")}};
}

void ExperimentSpec::validate() const {
  if (scenario_path.empty()) throw UsageError("a scenario file is required");
  if (epsilon && target_pfa) throw UsageError("give either --epsilon or --target-pfa, not both");
  const bool needs_threshold = is_sweep(command) || command == Command::OptimizeGradient ||
                               command == Command::OptimizePhases;
  if (needs_threshold && !epsilon && !target_pfa) throw UsageError("one of --epsilon / --target-pfa is required");
  if (epsilon && !(*epsilon >= 0.0)) throw UsageError("--epsilon must be nonnegative");
  if (target_pfa && !(*target_pfa > 0.0 && *target_pfa <= 1.0)) throw UsageError("--target-pfa must lie in (0, 1]");
  if (n_trials == 0) throw UsageError("--trials must be at least 1");
  if (command != Command::Validate && output_path.empty()) throw UsageError("an output path is required");
  if (levels < 2) throw UsageError("--levels must be at least 2");
  if (eval_trials == 0) throw UsageError("--eval-trials must be at least 1");
  if (grid_points < 2) throw UsageError("--grid-points must be at least 2");
  for (std::size_t i = 1; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > epsilons[i - 1])) throw UsageError("--epsilons must be strictly increasing");
  }
}

int run(const ExperimentSpec& spec, std::ostream& log) {
  try {
    spec.validate();
    switch (spec.command) {
      case Command::SweepPfa:
      case Command::SweepPmd:
        run_sweep(spec, log);
        break;
      case Command::Roc:
        run_roc(spec, log);
        break;
      case Command::OptimizeGradient:
        run_optimize_gradient(spec, log);
        break;
      case Command::OptimizePhases:
        run_optimize_phases(spec, log);
        break;
      case Command::Validate:
        return run_validation(spec, log) ? kSuccess : kValidationFailure;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    log << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ContractError& e) {
    log << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    log << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace rispla::cli
