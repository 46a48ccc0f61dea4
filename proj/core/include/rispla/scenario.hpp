#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "rispla/geometry.hpp"

namespace rispla::channel {

inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Full physical configuration of one Alice/Eve/Bob/RIS deployment.
///
/// Wavelength and noise variance are always derived from `frequency_hz`
/// and `lq_db`; nothing caches them.
struct Scenario {
  Vec3 alice_pos{};
  Vec3 eve_pos{};
  Vec3 bob_pos{};
  Vec3 ris_pos{};
  Vec3 ris_normal{0.0, 1.0, 0.0};
  double element_a = 0.5;  // m
  double element_b = 0.5;  // m
  std::size_t n_elements = 1;
  double frequency_hz = 28e9;
  double tx_gain = 1.0;  // linear
  double rx_gain = 1.0;  // linear
  double tx_power_w = 1.0;
  double refractive_index = 1.0;
  double lq_db = 0.0;  // transmit-to-noise power ratio
  double sigma_g2 = 1.0;  // variance of the RIS->Bob gains

  double wavelength() const { return kSpeedOfLight / frequency_hz; }
  /// sigma^2 = P_t * 10^(-LQ/10)
  double noise_variance() const;
  double noise_sigma() const;

  Scenario with_lq_db(double lq) const;

  /// Throws GeometryError / DomainError when an invariant fails.
  void validate() const;
};

/// Either a single phase-discontinuity gradient dPhi/dx (rad/m) used by the
/// pathloss model, or one phase per RIS element used by the CIR model.
class PhaseProfile {
 public:
  struct ScalarGradient {
    double gradient = 0.0;
  };
  struct PerElement {
    std::vector<double> phases;
  };

  PhaseProfile() : value_(ScalarGradient{}) {}
  static PhaseProfile gradient(double dphi_dx);
  /// Wraps every phase into [0, 2pi).
  static PhaseProfile per_element(std::vector<double> phases);
  static PhaseProfile zeros(std::size_t n) { return per_element(std::vector<double>(n, 0.0)); }

  bool is_gradient() const { return std::holds_alternative<ScalarGradient>(value_); }
  bool is_per_element() const { return std::holds_alternative<PerElement>(value_); }

  /// Throws ContractError when the profile holds the other variant.
  double gradient_value() const;
  const std::vector<double>& phases() const;

 private:
  explicit PhaseProfile(std::variant<ScalarGradient, PerElement> v) : value_(std::move(v)) {}
  std::variant<ScalarGradient, PerElement> value_;
};

/// Principal value in [0, 2pi).
double wrap_phase(double phase);

/// Parses the flat `key = value` scenario format. Positions are
/// comma-separated triples, `#` starts a comment. Unknown keys, duplicate
/// keys and missing required keys are ParseErrors; `sigma_g2` is optional.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario; round-trips exactly.
std::string format_scenario(const Scenario& s);

}  // namespace rispla::channel
