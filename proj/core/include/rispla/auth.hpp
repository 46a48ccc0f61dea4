#pragma once

#include <complex>
#include <variant>

namespace rispla::auth {

/// Bob's stored fingerprint of Alice.
struct PathlossFingerprint {
  double pl_a;  // linear, > 0
};
/// h_A^* Phi g_A for the RIS configuration that is currently active. Must be
/// rebuilt whenever the phase profile changes.
struct CirFingerprint {
  std::complex<double> ground_truth;
};
using Fingerprint = std::variant<PathlossFingerprint, CirFingerprint>;

enum class Verdict { AcceptH0, RejectH0 };

struct Decision {
  Verdict verdict;
  double statistic;
  double threshold;
};

/// How the phase statistic treats the +/-pi branch cut.
enum class PhaseWrap {
  Wrapped,  ///< circular distance in [0, pi]
  Literal,  ///< |arg(a) - arg(b)| of principal arguments, in [0, 2pi)
};

/// |pl_hat - PL_A|
double ts_pathloss(double pl_hat, const PathlossFingerprint& fp);

/// |zeta - h_A^* Phi g_A|
double ts_cir_magnitude(std::complex<double> zeta, const CirFingerprint& fp);

/// Phase distance between zeta and the ground truth. DomainError when
/// either has zero magnitude.
double ts_cir_phase(std::complex<double> zeta, const CirFingerprint& fp,
                    PhaseWrap wrap = PhaseWrap::Wrapped);

/// Accept H0 iff ts < epsilon; a tie rejects.
Decision decide(double ts, double epsilon);

/// 2 Q(epsilon / sigma). Takes no phase argument: false alarms depend only
/// on the noise.
double pfa_pathloss(double epsilon, double sigma);

/// Neyman-Pearson threshold sigma * Q^{-1}(target / 2).
double threshold_for_pfa(double target_pfa, double sigma);

/// Folded-normal CDF at epsilon with delta = pl_e - pl_a.
double pmd_pathloss(double epsilon, double sigma, double pl_a, double pl_e);

/// exp(-epsilon^2 / (2 s^2)) where `rayleigh_scale` s is the Rayleigh
/// parameter of |n|. For complex noise n ~ CN(0, sigma^2) that parameter is
/// sigma / sqrt(2); see complex_noise_rayleigh_scale.
double pfa_cir_magnitude(double epsilon, double rayleigh_scale);

/// Rayleigh parameter of |n| for n ~ CN(0, sigma^2).
double complex_noise_rayleigh_scale(double sigma);

/// Inverse of pfa_cir_magnitude in epsilon: s * sqrt(-2 ln p).
double threshold_for_pfa_cir_magnitude(double target_pfa, double rayleigh_scale);

}  // namespace rispla::auth
