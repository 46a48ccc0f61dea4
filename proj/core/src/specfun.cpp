#include "rispla/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rispla/errors.hpp"

namespace rispla::specfun {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kBracket = 40.0;

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("sigma must be positive and finite");
  }
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * (std::numbers::inv_sqrtpi / kSqrt2);
}

// Solves Q(x) = p for p in (0, 0.5]; the root is nonnegative.
double upper_tail_inverse(double p) {
  double lo = 0.0;
  double hi = kBracket;
  // Asymptotic start: x ~ sqrt(-2 ln p), decent across the whole tail.
  double x = p >= 0.5 ? 0.0 : std::sqrt(-2.0 * std::log(p));
  x = std::clamp(x, lo, hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = q_func(x) - p;
    if (f == 0.0) return x;
    // Q is decreasing: f > 0 means the root lies to the right.
    if (f > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double slope = -normal_pdf(x);
    double next = slope != 0.0 ? x - f / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

}  // namespace

double q_func(double x) {
  if (!std::isfinite(x)) throw DomainError("q_func: argument must be finite");
  return 0.5 * std::erfc(x / kSqrt2);
}

double q_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("q_inv: p must lie in (0, 1)");
  // 1 - p is exact for p >= 0.5, so the symmetry costs no precision.
  if (p > 0.5) return -upper_tail_inverse(1.0 - p);
  return upper_tail_inverse(p);
}

double folded_normal_cdf(double x, const FoldedNormalParams& params) {
  require_sigma(params.sigma);
  if (x <= 0.0) return 0.0;
  const double d = std::abs(params.delta);
  const double s = params.sigma * kSqrt2;
  // 1/2 [erf((x+d)/s) + erf((x-d)/s)] rewritten with erfc.
  const double value = 0.5 * (std::erfc((d - x) / s) - std::erfc((d + x) / s));
  return std::clamp(value, 0.0, 1.0);
}

Moments folded_normal_moments(const FoldedNormalParams& params) {
  require_sigma(params.sigma);
  const double d = params.delta;
  const double sigma = params.sigma;
  const double ratio = d / sigma;
  // Phi(-d/sigma) == Q(d/sigma)
  const double mean = sigma * std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * ratio * ratio) +
                      d * (1.0 - 2.0 * q_func(ratio));
  const double variance = std::max(0.0, d * d + sigma * sigma - mean * mean);
  return {mean, variance};
}

double rayleigh_ccdf(double x, double sigma) {
  require_sigma(sigma);
  if (x < 0.0 || std::isnan(x)) throw DomainError("rayleigh_ccdf: x must be nonnegative");
  return std::exp(-(x * x) / (2.0 * sigma * sigma));
}

}  // namespace rispla::specfun
