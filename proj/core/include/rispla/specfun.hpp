#pragma once

#include <utility>

namespace rispla::specfun {

/// Parameters of |X| where X ~ N(delta, sigma^2).
struct FoldedNormalParams {
  double delta = 0.0;
  double sigma = 1.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Standard normal tail probability P(Z > x). Throws DomainError for
/// non-finite x.
double q_func(double x);

/// Inverse of q_func on (0, 1). Newton iteration with a bisection
/// fallback bracketed on [-40, 40].
double q_inv(double p);

/// CDF of the folded normal, evaluated through erfc so both tails keep
/// relative precision. Zero for x < 0; clamped to [0, 1].
double folded_normal_cdf(double x, const FoldedNormalParams& params);

Moments folded_normal_moments(const FoldedNormalParams& params);

/// P(R > x) for R ~ Rayleigh(sigma), i.e. exp(-x^2 / (2 sigma^2)).
double rayleigh_ccdf(double x, double sigma);

}  // namespace rispla::specfun
