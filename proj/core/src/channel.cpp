#include "rispla/channel.hpp"

#include <cmath>
#include <numbers>

#include "rispla/errors.hpp"

namespace rispla::channel {

using std::numbers::pi;

double incidence_angle(const Vec3& tx_pos, const Scenario& scenario) {
  const Vec3 v = tx_pos - scenario.ris_pos;
  const double len = norm(v);
  if (len == 0.0) throw GeometryError("transmitter coincides with the RIS");
  const double cos_theta = dot(v, scenario.ris_normal) / len;
  if (cos_theta <= 1e-12) {
    throw GeometryError("transmitter lies in or behind the RIS plane");
  }
  return std::acos(std::min(1.0, cos_theta));
}

double reflection_angle(double theta_i, double gradient, const Scenario& scenario) {
  const double arg =
      std::sin(theta_i) + scenario.wavelength() / (2.0 * pi * scenario.refractive_index) * gradient;
  if (!(std::abs(arg) <= 1.0)) {
    throw EvanescentError("no propagating reflection: sin(theta_r) = " + std::to_string(arg));
  }
  return std::asin(arg);
}

double sinc_squared(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 3.0;
  const double s = std::sin(u) / u;
  return s * s;
}

double ris_pathloss(const Scenario& scenario, const Vec3& tx_pos, double gradient) {
  const double theta_i = incidence_angle(tx_pos, scenario);
  const double theta_r = reflection_angle(theta_i, gradient, scenario);
  const double d_i = distance(tx_pos, scenario.ris_pos);
  const double r = distance(scenario.bob_pos, scenario.ris_pos);
  if (r == 0.0) throw GeometryError("receiver coincides with the RIS");

  const double lambda = scenario.wavelength();
  const double gains = scenario.tx_gain * scenario.rx_gain / ((4.0 * pi) * (4.0 * pi));
  const double aperture = scenario.element_a * scenario.element_b / (d_i * r);
  const double cos_i = std::cos(theta_i);
  const double u = pi * scenario.element_b / lambda * (std::sin(theta_i) - std::sin(theta_r));
  return gains * aperture * aperture * cos_i * cos_i * sinc_squared(u);
}

double fspl(const Vec3& tx_pos, const Vec3& rx_pos, const Scenario& scenario) {
  const double d = distance(tx_pos, rx_pos);
  if (d == 0.0) throw DomainError("fspl: transmitter and receiver coincide");
  const double ratio = scenario.wavelength() / (4.0 * pi * d);
  return scenario.tx_gain * scenario.rx_gain * ratio * ratio;
}

ChannelRealization sample_cir(const Scenario& scenario, rng::Stream& stream) {
  ChannelRealization out;
  out.h.resize(scenario.n_elements);
  out.g.resize(scenario.n_elements);
  for (auto& h : out.h) h = stream.complex_normal(1.0);
  for (auto& g : out.g) g = stream.complex_normal(scenario.sigma_g2);
  return out;
}

std::complex<double> cascaded_gain(const ChannelRealization& realization, const PhaseProfile& profile) {
  const auto& phases = profile.phases();
  const std::size_t n = phases.size();
  if (realization.h.size() != n || realization.g.size() != n) {
    throw ContractError("cascaded_gain: realization and phase profile lengths differ");
  }
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    sum += std::conj(realization.h[i]) * std::polar(1.0, phases[i]) * realization.g[i];
  }
  return sum;
}

double add_noise(double value, double sigma, rng::Stream& stream) {
  if (!(sigma >= 0.0)) throw DomainError("add_noise: sigma must be nonnegative");
  if (sigma == 0.0) return value;
  return value + sigma * stream.normal();
}

std::complex<double> add_noise(std::complex<double> value, double sigma, rng::Stream& stream) {
  if (!(sigma >= 0.0)) throw DomainError("add_noise: sigma must be nonnegative");
  if (sigma == 0.0) return value;
  return value + stream.complex_normal(sigma * sigma);
}

}  // namespace rispla::channel
