#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rispla/auth.hpp"
#include "rispla/channel.hpp"
#include "rispla/rng.hpp"
#include "rispla/scenario.hpp"

namespace rispla::mc {

enum class Feature { Pathloss, CirMagnitude, CirPhase };

/// Ris: transmissions reach Bob through the surface (direct path blocked).
/// Direct: the non-RIS baseline; Friis pathloss, or a single CN(0, 1) gain
/// per transmitter for the CIR features.
enum class Link { Ris, Direct };

/// Frozen: each transmitter's channel is drawn once from `channel_seed` and
/// Bob's stored fingerprint equals Alice's channel. Refade: every
/// transmission draws fresh fading while the fingerprint stays at the
/// enrollment draw.
enum class Fading { Frozen, Refade };

enum class Transmitter { Alice = 0, Eve = 1 };
enum class Hypothesis { H0, H1 };

inline constexpr std::uint64_t kDefaultTrials = 1'000'000;

struct TrialPlan {
  std::uint64_t n_trials = kDefaultTrials;
  std::uint64_t master_seed = 1;
  Feature feature = Feature::Pathloss;
  double epsilon = 0.0;
  channel::Scenario scenario;
  channel::PhaseProfile profile;
  Link link = Link::Ris;
  Fading fading = Fading::Frozen;
  auth::PhaseWrap wrap = auth::PhaseWrap::Wrapped;
  std::uint64_t channel_seed = 0;
  unsigned workers = 0;

  /// Pathloss needs a scalar gradient, the CIR features a per-element
  /// profile of length n_elements (Ris link only).
  void validate() const;
};

struct ErrorEstimate {
  double value = 0.0;  ///< NaN when n_conditioning == 0
  double half_width_95 = 0.0;
  std::uint64_t n_conditioning = 0;

  static ErrorEstimate from_counts(std::uint64_t errors, std::uint64_t n);
  bool valid() const { return n_conditioning > 0; }
  bool low_confidence() const { return n_conditioning < 100; }
  /// Binomial standard error sqrt(p (1 - p) / n) evaluated at `p`.
  double standard_error(double p) const;
};

struct TrialResult {
  ErrorEstimate pfa;
  ErrorEstimate pmd;
};

struct RocPoint {
  double epsilon;
  double pfa;
  double pd;
};

struct RocCurve {
  std::vector<RocPoint> points;
};

/// Alice's and Eve's frozen channels for a given seed.
struct EnrollmentChannels {
  channel::ChannelRealization alice;
  channel::ChannelRealization eve;
};
EnrollmentChannels enrollment_channels(const channel::Scenario& scenario, std::uint64_t channel_seed);

/// Per-plan observation model: everything a trial needs that does not
/// depend on the trial's random numbers. Immutable once built, so workers
/// share one instance.
class TrialModel {
 public:
  static TrialModel from_plan(const TrialPlan& plan);

  /// Pathloss feature with explicit ground-truth values.
  static TrialModel pathloss(double pl_alice, double pl_eve, double sigma);

  /// Frozen CIR feature with explicit noiseless gains for both
  /// transmitters; Alice's gain is the fingerprint.
  static TrialModel cir(Feature feature, std::complex<double> alice_gain, std::complex<double> eve_gain,
                        double sigma, auth::PhaseWrap wrap = auth::PhaseWrap::Wrapped);

  Feature feature() const { return feature_; }
  double noise_sigma() const { return sigma_; }
  auth::Fingerprint fingerprint() const;

  /// Noiseless feature value for a transmitter under frozen fading
  /// (pathloss value as a real number, or the complex gain).
  std::complex<double> frozen_value(Transmitter tx) const { return value_[static_cast<int>(tx)]; }

  /// Draws one observation from `tx` and returns its test statistic.
  double statistic(Transmitter tx, rng::Stream& stream) const;

 private:
  TrialModel() = default;
  std::complex<double> fresh_gain(rng::Stream& stream) const;

  Feature feature_ = Feature::Pathloss;
  double sigma_ = 0.0;
  auth::PhaseWrap wrap_ = auth::PhaseWrap::Wrapped;
  std::array<std::complex<double>, 2> value_{};
  // Refade only
  bool refade_ = false;
  Link link_ = Link::Ris;
  std::optional<channel::Scenario> scenario_;
  std::optional<channel::PhaseProfile> profile_;
};

/// Uniform transmitter draw, one observation and one decision per trial.
/// pfa = rejections among Alice's trials, pmd = acceptances among Eve's.
TrialResult run_trials(const TrialPlan& plan);
TrialResult run_trials(const TrialModel& model, std::uint64_t n_trials, std::uint64_t master_seed,
                       double epsilon, unsigned workers = 0);

/// All per-trial statistics of one pass, split by transmitter and sorted.
struct TrialStatistics {
  std::vector<double> alice;
  std::vector<double> eve;
};
TrialStatistics collect_statistics(const TrialModel& model, std::uint64_t n_trials, std::uint64_t master_seed,
                                   unsigned workers = 0);

/// One pass, many thresholds. `epsilons` must be strictly increasing.
RocCurve roc_sweep(const TrialPlan& plan, std::span<const double> epsilons);
RocCurve roc_from_statistics(const TrialStatistics& stats, std::span<const double> epsilons);

/// n_samples draws of the test statistic with the transmitter fixed by the
/// hypothesis, sorted ascending.
std::vector<double> empirical_distribution(const TrialPlan& plan, Hypothesis hypothesis, std::uint64_t n_samples);
std::vector<double> empirical_distribution(const TrialModel& model, Hypothesis hypothesis, std::uint64_t n_samples,
                                           std::uint64_t seed, unsigned workers = 0);

/// PFA (H0) or PMD (H1) estimated from n_samples draws under a fixed
/// hypothesis; uses the same substreams as empirical_distribution.
ErrorEstimate conditional_error(const TrialModel& model, Hypothesis hypothesis, std::uint64_t n_samples,
                                std::uint64_t seed, double epsilon, unsigned workers = 0);

/// Fraction of a sorted sample strictly below x, i.e. the acceptance rate
/// of the threshold test at epsilon = x.
double fraction_below(std::span<const double> sorted, double x);

/// Kolmogorov-Smirnov distance between a sorted sample and a CDF.
template <typename Cdf>
double ks_distance(std::span<const double> sorted, Cdf&& cdf) {
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    worst = std::max({worst, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return worst;
}

}  // namespace rispla::mc
