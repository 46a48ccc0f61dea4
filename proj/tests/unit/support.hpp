#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>

#include "rispla/scenario.hpp"

namespace rispla::test {

/// The table1.cfg deployment, built in code so tests do not depend on the working
/// directory.
inline channel::Scenario table1() {
  channel::Scenario s;
  s.alice_pos = {100, 100, 1};
  s.eve_pos = {90, 100, 1};
  s.ris_pos = {90, 90, 1};
  s.bob_pos = {90, 80, 1};
  s.ris_normal = {0, 1, 0};
  s.element_a = 0.5;
  s.element_b = 0.5;
  s.n_elements = 256;
  s.frequency_hz = 28e9;
  s.tx_gain = 1000;
  s.rx_gain = 1000;
  s.tx_power_w = 1;
  s.refractive_index = 1;
  s.lq_db = 80;
  return s;
}

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20'000) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

inline double normal_pdf(double x, double mean, double sigma) {
  const double z = (x - mean) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

/// Q(x) by quadrature of the normal density, independent of erfc.
inline double q_oracle(double x) {
  if (x < 0) return 1.0 - q_oracle(-x);
  return simpson([](double t) { return normal_pdf(t, 0.0, 1.0); }, x, x + 40.0, 200'000);
}

/// Tiny deterministic generator for property tests; independent of the
/// library's RNG so a bug there cannot hide in the test inputs.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : s_(seed * 2862933555777941757ULL + 3037000493ULL) {}
  double uniform() {
    s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(s_ >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }

 private:
  std::uint64_t s_;
};

}  // namespace rispla::test
