#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rispla/cli/experiment.hpp"

namespace {

using rispla::cli::Baseline;
using rispla::cli::Command;
using rispla::cli::ExperimentSpec;

void add_common(CLI::App& sub, ExperimentSpec& spec, std::string& lq, std::string& feature, std::string& baseline,
                std::string& fading, bool& literal_phase) {
  sub.add_option("-s,--scenario", spec.scenario_path, "Scenario file (key = value)")->required();
  sub.add_option("--feature", feature, "pathloss | cir-magnitude | cir-phase")
      ->check(CLI::IsMember({"pathloss", "cir-magnitude", "cir-phase"}));
  sub.add_option("--lq", lq, "LQ grid in dB: start:step:stop or a comma list");
  sub.add_option("--epsilon", spec.epsilon, "Decision threshold (linear units)");
  sub.add_option("--target-pfa", spec.target_pfa, "False-alarm target; converted to a threshold per LQ point");
  sub.add_option("-n,--trials", spec.n_trials, "Monte-Carlo transmissions");
  sub.add_option("--seed", spec.seed, "Master seed");
  sub.add_option("--channel-seed", spec.channel_seed, "Seed of the enrolled CIR channels");
  sub.add_option("-j,--workers", spec.workers, "Worker threads (0 = all cores)");
  sub.add_option("--baseline", baseline, "ris | noris | both")->check(CLI::IsMember({"ris", "noris", "both"}));
  sub.add_option("--fading", fading, "frozen | refade")->check(CLI::IsMember({"frozen", "refade"}));
  sub.add_flag("--literal-phase", literal_phase, "Raw principal-argument difference for the phase statistic");
  sub.add_option("--gradient", spec.gradient, "Fixed RIS phase gradient dPhi/dx (rad/m)");
  sub.add_option("--phases", spec.phases, "Fixed per-element RIS phases (rad)")->delimiter(',');
}

void add_search(CLI::App& sub, ExperimentSpec& spec, std::string& strategy) {
  sub.add_option("--grid-points", spec.grid_points, "Gradient grid resolution");
  sub.add_option("--grid-spans", spec.grid_spans, "Default grid half-width in sinc null spacings");
  sub.add_option("--grid-min", spec.grid_min, "Gradient grid start (rad/m)");
  sub.add_option("--grid-max", spec.grid_max, "Gradient grid end (rad/m)");
  sub.add_option("--levels", spec.levels, "Discrete phase levels L");
  sub.add_option("--strategy", strategy, "coordinate | exhaustive")
      ->check(CLI::IsMember({"coordinate", "exhaustive"}));
  sub.add_option("--eval-trials", spec.eval_trials, "Eve transmissions per phase-objective evaluation");
  sub.add_option("--max-passes", spec.max_passes, "Coordinate-descent pass limit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS-assisted physical-layer authentication laboratory"};
  app.require_subcommand(1);

  ExperimentSpec spec;
  std::string lq;
  std::string feature = "pathloss";
  std::string baseline = "ris";
  std::string fading = "frozen";
  std::string strategy = "coordinate";
  std::string epsilons;
  bool literal_phase = false;

  const std::map<std::string, Command> commands = {
      {"sweep-pfa", Command::SweepPfa},
      {"sweep-pmd", Command::SweepPmd},
      {"roc", Command::Roc},
      {"optimize-gradient", Command::OptimizeGradient},
      {"optimize-phases", Command::OptimizePhases},
      {"validate", Command::Validate},
  };
  const std::map<std::string, std::string> help = {
      {"sweep-pfa", "False-alarm probability versus LQ"},
      {"sweep-pmd", "Missed-detection probability versus LQ"},
      {"roc", "ROC curve from one Monte-Carlo pass"},
      {"optimize-gradient", "Grid search of the RIS phase gradient (pathloss test)"},
      {"optimize-phases", "Discrete phase-matrix search (CIR phase test)"},
      {"validate", "Analytical vs Monte-Carlo cross-check"},
  };

  for (const auto& [name, command] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(*sub, spec, lq, feature, baseline, fading, literal_phase);
    if (command != Command::Validate) sub->add_option("-o,--output", spec.output_path, "CSV output path")->required();
    if (command == Command::Roc) {
      sub->add_option("--epsilons", epsilons, "Threshold grid: start:step:stop or a comma list");
      sub->add_option("--roc-points", spec.roc_points, "Points of the default log-spaced threshold grid");
    }
    add_search(*sub, spec, strategy);
    sub->callback([&spec, command = command] { spec.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rispla::cli::kUsageError;
  }

  try {
    if (!lq.empty()) spec.lq_grid_db = rispla::cli::parse_grid(lq);
    if (!epsilons.empty()) spec.epsilons = rispla::cli::parse_grid(epsilons);
  } catch (const rispla::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rispla::cli::kUsageError;
  }
  spec.feature = feature == "pathloss"        ? rispla::mc::Feature::Pathloss
                 : feature == "cir-magnitude" ? rispla::mc::Feature::CirMagnitude
                                              : rispla::mc::Feature::CirPhase;
  spec.baseline = baseline == "ris" ? Baseline::Ris : baseline == "noris" ? Baseline::NoRis : Baseline::Both;
  spec.fading = fading == "refade" ? rispla::mc::Fading::Refade : rispla::mc::Fading::Frozen;
  spec.wrap = literal_phase ? rispla::auth::PhaseWrap::Literal : rispla::auth::PhaseWrap::Wrapped;
  spec.strategy = strategy == "exhaustive" ? rispla::optim::Strategy::Exhaustive : rispla::optim::Strategy::Coordinate;

  std::ostream& log = spec.command == Command::Validate ? std::cout : std::cerr;
  return rispla::cli::run(spec, log);
}
