#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rispla/auth.hpp"
#include "rispla/mc.hpp"
#include "rispla/optim.hpp"

namespace rispla::cli {

enum class Command { SweepPfa, SweepPmd, Roc, OptimizeGradient, OptimizePhases, Validate };
enum class Baseline { Ris, NoRis, Both };

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kRuntimeError = 3,
};

/// Bad flag combination or unparsable input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
  Command command = Command::SweepPfa;
  std::filesystem::path scenario_path;
  mc::Feature feature = mc::Feature::Pathloss;
  /// LQ points in dB. Sweeps default to 0:2:40; Roc and Optimize* use the
  /// single value given here, or the scenario's lq_db when empty.
  std::vector<double> lq_grid_db;
  std::optional<double> epsilon;
  std::optional<double> target_pfa;
  std::uint64_t n_trials = mc::kDefaultTrials;
  std::uint64_t seed = 1;
  std::filesystem::path output_path;
  Baseline baseline = Baseline::Ris;

  unsigned workers = 0;
  mc::Fading fading = mc::Fading::Frozen;
  auth::PhaseWrap wrap = auth::PhaseWrap::Wrapped;
  std::uint64_t channel_seed = 0;

  /// Fixed RIS configuration. When absent, SweepPmd and Roc optimize it per
  /// LQ point; SweepPfa uses the zero profile (false alarms do not depend on it).
  std::optional<double> gradient;
  std::vector<double> phases;

  /// Roc thresholds; empty means a log-spaced grid over the observed
  /// statistic range with `roc_points` points.
  std::vector<double> epsilons;
  std::size_t roc_points = 64;

  std::size_t grid_points = 10'000;
  double grid_spans = 4.0;
  std::optional<double> grid_min;
  std::optional<double> grid_max;

  std::size_t levels = 16;
  optim::Strategy strategy = optim::Strategy::Coordinate;
  std::uint64_t eval_trials = 10'000;
  std::size_t max_passes = 50;

  /// Throws UsageError.
  void validate() const;
};

/// Default LQ sweep, 0:2:40 dB.
std::vector<double> default_lq_grid();

/// Parses "start:step:stop" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

/// Files written for a baseline selection: the path itself for a single
/// baseline, `<stem>.ris<ext>` and `<stem>.noris<ext>` for Both.
std::vector<std::pair<mc::Link, std::filesystem::path>> output_targets(const std::filesystem::path& path,
                                                                      Baseline baseline);

/// Runs one experiment and returns its exit code. Progress and errors go
/// to `log`.
int run(const ExperimentSpec& spec, std::ostream& log);

/// The analytical-vs-Monte-Carlo cross-check behind `validate`. Prints one
/// PASS/FAIL line per check; returns true when all pass.
bool run_validation(const ExperimentSpec& spec, std::ostream& out);

}  // namespace rispla::cli
