#include "rispla/auth.hpp"

#include <cmath>
#include <numbers>

#include "rispla/errors.hpp"
#include "rispla/specfun.hpp"

namespace rispla::auth {
namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive and finite");
}

void require_epsilon(double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("threshold must be nonnegative");
}

}  // namespace

double ts_pathloss(double pl_hat, const PathlossFingerprint& fp) { return std::abs(pl_hat - fp.pl_a); }

double ts_cir_magnitude(std::complex<double> zeta, const CirFingerprint& fp) {
  return std::abs(zeta - fp.ground_truth);
}

double ts_cir_phase(std::complex<double> zeta, const CirFingerprint& fp, PhaseWrap wrap) {
  if (zeta == 0.0 || fp.ground_truth == 0.0) {
    throw DomainError("ts_cir_phase: phase of a zero-magnitude value is undefined");
  }
  const double raw = std::abs(std::arg(zeta) - std::arg(fp.ground_truth));
  if (wrap == PhaseWrap::Literal) return raw;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return raw > std::numbers::pi ? two_pi - raw : raw;
}

Decision decide(double ts, double epsilon) {
  return {ts < epsilon ? Verdict::AcceptH0 : Verdict::RejectH0, ts, epsilon};
}

double pfa_pathloss(double epsilon, double sigma) {
  require_sigma(sigma);
  require_epsilon(epsilon);
  if (std::isinf(epsilon)) return 0.0;
  return std::min(1.0, 2.0 * specfun::q_func(epsilon / sigma));
}

double threshold_for_pfa(double target_pfa, double sigma) {
  require_sigma(sigma);
  if (!(target_pfa > 0.0 && target_pfa <= 1.0)) {
    throw DomainError("threshold_for_pfa: target must lie in (0, 1]");
  }
  return sigma * specfun::q_inv(target_pfa / 2.0);
}

double pmd_pathloss(double epsilon, double sigma, double pl_a, double pl_e) {
  require_sigma(sigma);
  require_epsilon(epsilon);
  if (std::isinf(epsilon)) return 1.0;
  return specfun::folded_normal_cdf(epsilon, {pl_e - pl_a, sigma});
}

double pfa_cir_magnitude(double epsilon, double rayleigh_scale) {
  require_sigma(rayleigh_scale);
  require_epsilon(epsilon);
  if (std::isinf(epsilon)) return 0.0;
  return specfun::rayleigh_ccdf(epsilon, rayleigh_scale);
}

double complex_noise_rayleigh_scale(double sigma) {
  require_sigma(sigma);
  return sigma / std::numbers::sqrt2;
}

double threshold_for_pfa_cir_magnitude(double target_pfa, double rayleigh_scale) {
  require_sigma(rayleigh_scale);
  if (!(target_pfa > 0.0 && target_pfa <= 1.0)) {
    throw DomainError("threshold_for_pfa_cir_magnitude: target must lie in (0, 1]");
  }
  return rayleigh_scale * std::sqrt(-2.0 * std::log(target_pfa));
}

}  // namespace rispla::auth
