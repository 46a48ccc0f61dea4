#include "rispla/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rispla/errors.hpp"
#include "rispla/parallel.hpp"

namespace rispla::mc {

namespace {

constexpr int kAlice = static_cast<int>(Transmitter::Alice);
constexpr int kEve = static_cast<int>(Transmitter::Eve);

bool is_cir(Feature f) { return f != Feature::Pathloss; }

Transmitter transmitter_for(Hypothesis h) { return h == Hypothesis::H0 ? Transmitter::Alice : Transmitter::Eve; }

void require_strictly_increasing(std::span<const double> epsilons) {
  for (std::size_t i = 1; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > epsilons[i - 1])) throw ContractError("epsilons must be strictly increasing");
  }
}

}  // namespace

void TrialPlan::validate() const {
  if (n_trials == 0) throw ContractError("n_trials must be at least 1");
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be nonnegative");
  scenario.validate();
  if (feature == Feature::Pathloss) {
    if (!profile.is_gradient()) throw ContractError("pathloss feature needs a scalar gradient profile");
  } else if (link == Link::Ris) {
    if (!profile.is_per_element()) throw ContractError("CIR features need a per-element phase profile");
    if (profile.phases().size() != scenario.n_elements) {
      throw ContractError("phase profile length differs from n_elements");
    }
  }
}

ErrorEstimate ErrorEstimate::from_counts(std::uint64_t errors, std::uint64_t n) {
  if (n == 0) return {std::numeric_limits<double>::quiet_NaN(), 0.0, 0};
  const double p = static_cast<double>(errors) / static_cast<double>(n);
  return {p, 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

double ErrorEstimate::standard_error(double p) const {
  if (n_conditioning == 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n_conditioning));
}

EnrollmentChannels enrollment_channels(const channel::Scenario& scenario, std::uint64_t channel_seed) {
  auto alice_stream = rng::Stream::substream(channel_seed, kAlice, rng::Domain::Channel);
  auto eve_stream = rng::Stream::substream(channel_seed, kEve, rng::Domain::Channel);
  return {channel::sample_cir(scenario, alice_stream), channel::sample_cir(scenario, eve_stream)};
}

TrialModel TrialModel::pathloss(double pl_alice, double pl_eve, double sigma) {
  if (!(sigma >= 0.0)) throw DomainError("noise sigma must be nonnegative");
  TrialModel m;
  m.feature_ = Feature::Pathloss;
  m.sigma_ = sigma;
  m.value_ = {pl_alice, pl_eve};
  return m;
}

TrialModel TrialModel::cir(Feature feature, std::complex<double> alice_gain, std::complex<double> eve_gain,
                           double sigma, auth::PhaseWrap wrap) {
  if (!is_cir(feature)) throw ContractError("TrialModel::cir needs a CIR feature");
  if (!(sigma >= 0.0)) throw DomainError("noise sigma must be nonnegative");
  TrialModel m;
  m.feature_ = feature;
  m.sigma_ = sigma;
  m.wrap_ = wrap;
  m.value_ = {alice_gain, eve_gain};
  return m;
}

TrialModel TrialModel::from_plan(const TrialPlan& plan) {
  plan.validate();
  const auto& s = plan.scenario;
  const double sigma = s.noise_sigma();

  if (plan.feature == Feature::Pathloss) {
    if (plan.link == Link::Direct) {
      return pathloss(channel::fspl(s.alice_pos, s.bob_pos, s), channel::fspl(s.eve_pos, s.bob_pos, s), sigma);
    }
    const double gradient = plan.profile.gradient_value();
    return pathloss(channel::ris_pathloss(s, s.alice_pos, gradient), channel::ris_pathloss(s, s.eve_pos, gradient),
                    sigma);
  }

  std::complex<double> alice;
  std::complex<double> eve;
  if (plan.link == Link::Direct) {
    auto a = rng::Stream::substream(plan.channel_seed, kAlice, rng::Domain::Channel);
    auto e = rng::Stream::substream(plan.channel_seed, kEve, rng::Domain::Channel);
    alice = a.complex_normal(1.0);
    eve = e.complex_normal(1.0);
  } else {
    const auto channels = enrollment_channels(s, plan.channel_seed);
    alice = channel::cascaded_gain(channels.alice, plan.profile);
    eve = channel::cascaded_gain(channels.eve, plan.profile);
  }
  TrialModel m = cir(plan.feature, alice, eve, sigma, plan.wrap);
  if (plan.fading == Fading::Refade) {
    m.refade_ = true;
    m.link_ = plan.link;
    m.scenario_ = s;
    if (plan.link == Link::Ris) m.profile_ = plan.profile;
  }
  return m;
}

auth::Fingerprint TrialModel::fingerprint() const {
  if (feature_ == Feature::Pathloss) return auth::PathlossFingerprint{value_[kAlice].real()};
  return auth::CirFingerprint{value_[kAlice]};
}

std::complex<double> TrialModel::fresh_gain(rng::Stream& stream) const {
  if (link_ == Link::Direct) return stream.complex_normal(1.0);
  return channel::cascaded_gain(channel::sample_cir(*scenario_, stream), *profile_);
}

double TrialModel::statistic(Transmitter tx, rng::Stream& stream) const {
  const auto& truth = value_[static_cast<int>(tx)];
  if (feature_ == Feature::Pathloss) {
    const double observed = channel::add_noise(truth.real(), sigma_, stream);
    return auth::ts_pathloss(observed, {value_[kAlice].real()});
  }
  const std::complex<double> gain = refade_ ? fresh_gain(stream) : truth;
  const std::complex<double> zeta = channel::add_noise(gain, sigma_, stream);
  const auth::CirFingerprint fp{value_[kAlice]};
  if (feature_ == Feature::CirMagnitude) return auth::ts_cir_magnitude(zeta, fp);
  return auth::ts_cir_phase(zeta, fp, wrap_);
}

TrialResult run_trials(const TrialPlan& plan) {
  return run_trials(TrialModel::from_plan(plan), plan.n_trials, plan.master_seed, plan.epsilon, plan.workers);
}

TrialResult run_trials(const TrialModel& model, std::uint64_t n_trials, std::uint64_t master_seed, double epsilon,
                       unsigned workers) {
  if (n_trials == 0) throw ContractError("n_trials must be at least 1");
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be nonnegative");

  struct Counts {
    std::uint64_t alice = 0, alice_rejected = 0, eve = 0, eve_accepted = 0;
  };
  std::vector<Counts> partial(resolve_workers(workers));
  parallel_chunks(n_trials, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    Counts c;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto stream = rng::Stream::substream(master_seed, i, rng::Domain::Trial);
      const Transmitter tx = stream.coin() ? Transmitter::Eve : Transmitter::Alice;
      const bool accept = auth::decide(model.statistic(tx, stream), epsilon).verdict == auth::Verdict::AcceptH0;
      if (tx == Transmitter::Alice) {
        ++c.alice;
        c.alice_rejected += accept ? 0 : 1;
      } else {
        ++c.eve;
        c.eve_accepted += accept ? 1 : 0;
      }
    }
    partial[chunk] = c;
  });

  Counts total;
  for (const auto& c : partial) {
    total.alice += c.alice;
    total.alice_rejected += c.alice_rejected;
    total.eve += c.eve;
    total.eve_accepted += c.eve_accepted;
  }
  return {ErrorEstimate::from_counts(total.alice_rejected, total.alice),
          ErrorEstimate::from_counts(total.eve_accepted, total.eve)};
}

TrialStatistics collect_statistics(const TrialModel& model, std::uint64_t n_trials, std::uint64_t master_seed,
                                   unsigned workers) {
  if (n_trials == 0) throw ContractError("n_trials must be at least 1");
  // Indexed by trial so the split below is independent of the chunking.
  std::vector<double> value(n_trials);
  std::vector<unsigned char> from_eve(n_trials);
  parallel_chunks(n_trials, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      auto stream = rng::Stream::substream(master_seed, i, rng::Domain::Trial);
      const Transmitter tx = stream.coin() ? Transmitter::Eve : Transmitter::Alice;
      from_eve[i] = tx == Transmitter::Eve;
      value[i] = model.statistic(tx, stream);
    }
  });
  TrialStatistics stats;
  for (std::uint64_t i = 0; i < n_trials; ++i) {
    (from_eve[i] ? stats.eve : stats.alice).push_back(value[i]);
  }
  std::sort(stats.alice.begin(), stats.alice.end());
  std::sort(stats.eve.begin(), stats.eve.end());
  return stats;
}

double fraction_below(std::span<const double> sorted, double x) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const auto below = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
  return static_cast<double>(below) / static_cast<double>(sorted.size());
}

RocCurve roc_from_statistics(const TrialStatistics& stats, std::span<const double> epsilons) {
  require_strictly_increasing(epsilons);
  RocCurve curve;
  curve.points.reserve(epsilons.size());
  for (double eps : epsilons) {
    if (!(eps >= 0.0)) throw DomainError("epsilon must be nonnegative");
    // Same integer ratios as run_trials so a single-threshold sweep matches it bit for bit.
    const auto alice_accepts = static_cast<std::uint64_t>(
        std::lower_bound(stats.alice.begin(), stats.alice.end(), eps) - stats.alice.begin());
    const auto eve_accepts = static_cast<std::uint64_t>(
        std::lower_bound(stats.eve.begin(), stats.eve.end(), eps) - stats.eve.begin());
    const auto pfa = ErrorEstimate::from_counts(stats.alice.size() - alice_accepts, stats.alice.size());
    const auto pmd = ErrorEstimate::from_counts(eve_accepts, stats.eve.size());
    curve.points.push_back({eps, pfa.value, 1.0 - pmd.value});
  }
  return curve;
}

RocCurve roc_sweep(const TrialPlan& plan, std::span<const double> epsilons) {
  require_strictly_increasing(epsilons);
  const auto model = TrialModel::from_plan(plan);
  return roc_from_statistics(collect_statistics(model, plan.n_trials, plan.master_seed, plan.workers), epsilons);
}

std::vector<double> empirical_distribution(const TrialModel& model, Hypothesis hypothesis, std::uint64_t n_samples,
                                           std::uint64_t seed, unsigned workers) {
  if (n_samples == 0) throw ContractError("n_samples must be at least 1");
  const Transmitter tx = transmitter_for(hypothesis);
  std::vector<double> out(n_samples);
  parallel_chunks(n_samples, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      auto stream = rng::Stream::substream(seed, i, rng::Domain::Sample);
      out[i] = model.statistic(tx, stream);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> empirical_distribution(const TrialPlan& plan, Hypothesis hypothesis, std::uint64_t n_samples) {
  return empirical_distribution(TrialModel::from_plan(plan), hypothesis, n_samples, plan.master_seed, plan.workers);
}

ErrorEstimate conditional_error(const TrialModel& model, Hypothesis hypothesis, std::uint64_t n_samples,
                                std::uint64_t seed, double epsilon, unsigned workers) {
  if (n_samples == 0) throw ContractError("n_samples must be at least 1");
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be nonnegative");
  const Transmitter tx = transmitter_for(hypothesis);
  std::vector<std::uint64_t> partial(resolve_workers(workers), 0);
  parallel_chunks(n_samples, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t errors = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto stream = rng::Stream::substream(seed, i, rng::Domain::Sample);
      const bool accept = auth::decide(model.statistic(tx, stream), epsilon).verdict == auth::Verdict::AcceptH0;
      errors += (hypothesis == Hypothesis::H0) != accept ? 1 : 0;
    }
    partial[chunk] = errors;
  });
  std::uint64_t errors = 0;
  for (auto e : partial) errors += e;
  return ErrorEstimate::from_counts(errors, n_samples);
}

}  // namespace rispla::mc
