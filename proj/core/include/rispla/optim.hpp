#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rispla/auth.hpp"
#include "rispla/mc.hpp"
#include "rispla/scenario.hpp"

namespace rispla::optim {

/// One objective evaluation.
///
/// Gradient search: coordinate 0, value = dPhi/dx.
/// Coordinate descent: coordinate = element number (1-based), value = the
/// phase tried for that element.
/// Exhaustive search: coordinate 0, value = candidate index.
struct TracePoint {
  double coordinate;
  double value;
  double pmd;
};

struct OptResult {
  channel::PhaseProfile best_profile;
  double best_pmd = 1.0;
  std::uint64_t evaluations = 0;
  std::vector<TracePoint> trace;
  /// Grid gradients with no propagating reflection for Alice or Eve.
  std::vector<double> skipped;
  /// Objective after each coordinate-descent pass (empty otherwise).
  std::vector<double> pass_objectives;
};

/// Exhaustive search over a gradient grid for the minimum analytical
/// missed-detection probability of the pathloss test. The first minimizer
/// wins ties. Throws InfeasibleError if every grid point is evanescent.
OptResult optimize_gradient(const channel::Scenario& scenario, double epsilon, std::span<const double> grid);

/// Spacing between consecutive nulls of the sinc^2 factor in dPhi/dx,
/// 2 pi n1 / b. The reflected-angle offset depends only on the gradient,
/// so Alice and Eve share these nulls.
double gradient_null_spacing(const channel::Scenario& scenario);

/// `points` evenly spaced gradients over [-spans, +spans] null spacings.
std::vector<double> default_gradient_grid(const channel::Scenario& scenario, std::size_t points = 10'000,
                                          double spans = 4.0);

/// A maximal run of consecutive trace points with pmd below a threshold.
struct ZeroRun {
  std::size_t first;
  std::size_t last;
  double center;  ///< midpoint of the run's values
};

/// Near-zero regions of a (value-ordered) trace.
std::vector<ZeroRun> near_zero_minima(std::span<const TracePoint> trace, double threshold);

enum class Strategy { Exhaustive, Coordinate };

inline constexpr double kExhaustiveGuard = 1e6;

struct PhaseSearch {
  std::size_t levels = 16;
  Strategy strategy = Strategy::Coordinate;
  /// Eve transmissions per objective evaluation.
  std::uint64_t eval_trials = 10'000;
  /// Common-random-numbers seed shared by every candidate.
  std::uint64_t seed = 1;
  std::uint64_t channel_seed = 0;
  std::size_t max_passes = 50;
  /// Stop coordinate descent once this many evaluations were spent (0 = no cap).
  std::uint64_t max_evaluations = 0;
  auth::PhaseWrap wrap = auth::PhaseWrap::Wrapped;
  unsigned workers = 0;
};

/// Empirical PMD of the phase test for one candidate profile, using frozen
/// channels from `search.channel_seed` and noise from `search.seed`.
double phase_pmd(const channel::Scenario& scenario, double epsilon, const channel::PhaseProfile& profile,
                 const PhaseSearch& search, unsigned workers = 1);

/// Profile with every element at level `index[n]` of an L-level alphabet
/// {2 pi k / L}.
channel::PhaseProfile profile_from_levels(std::span<const std::size_t> index, std::size_t levels);

/// Minimizes the phase-test missed detection over discrete phase matrices.
/// Exhaustive enumerates all L^N assignments (refused with BudgetError above
/// 10^6); Coordinate sweeps elements 1..N, fixing each at its best level
/// given the others, until a pass changes nothing or the budget runs out.
OptResult optimize_phase_matrix(const channel::Scenario& scenario, double epsilon, const PhaseSearch& search);

}  // namespace rispla::optim
