#pragma once

#include <complex>
#include <vector>

#include "rispla/geometry.hpp"
#include "rispla/rng.hpp"
#include "rispla/scenario.hpp"

namespace rispla::channel {

/// Transmitter->RIS gains `h` and RIS->receiver gains `g`, one per element.
struct ChannelRealization {
  std::vector<std::complex<double>> h;
  std::vector<std::complex<double>> g;
};

/// Angle between the transmitter direction and the RIS normal, in [0, pi/2).
/// A transmitter in the surface plane (or behind it) has no reflected path
/// and raises GeometryError.
double incidence_angle(const Vec3& tx_pos, const Scenario& scenario);

/// Generalized Snell reflection:
///   theta_r = asin(sin(theta_i) + lambda / (2 pi n1) * dPhi/dx).
/// Signed, principal arcsine branch. EvanescentError when the argument
/// leaves [-1, 1].
double reflection_angle(double theta_i, double gradient, const Scenario& scenario);

/// (sin u / u)^2 with the removable singularity handled by its series.
double sinc_squared(double u);

/// Far-field single-element RIS pathloss as a linear power gain:
///
///   PL = Gt Gr / (4 pi)^2 * (a b / (d_i r))^2 * cos^2(theta_i)
///        * sinc^2( (pi b / lambda) (sin theta_i - sin theta_r) )
///
/// with d_i the transmitter-RIS distance and r the RIS-Bob distance.
double ris_pathloss(const Scenario& scenario, const Vec3& tx_pos, double gradient);

/// Friis free-space gain Gt Gr (lambda / (4 pi d))^2 between two nodes.
double fspl(const Vec3& tx_pos, const Vec3& rx_pos, const Scenario& scenario);

/// h_n ~ CN(0, 1), g_n ~ CN(0, sigma_g2), independent across elements.
ChannelRealization sample_cir(const Scenario& scenario, rng::Stream& stream);

/// sum_n conj(h_n) e^{j psi_n} g_n
std::complex<double> cascaded_gain(const ChannelRealization& realization, const PhaseProfile& profile);

/// value + N(0, sigma^2)
double add_noise(double value, double sigma, rng::Stream& stream);
/// value + CN(0, sigma^2); each component carries sigma^2 / 2.
std::complex<double> add_noise(std::complex<double> value, double sigma, rng::Stream& stream);

}  // namespace rispla::channel
