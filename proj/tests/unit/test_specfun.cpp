#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "rispla/errors.hpp"
#include "rispla/specfun.hpp"
#include "support.hpp"

using namespace rispla;
using namespace rispla::specfun;

TEST(QFunc, MatchesQuadrature) {
  for (double x : {-3.0, -1.0, 0.0, 0.5, 1.2816, 2.0, 3.0, 5.0}) {
    EXPECT_NEAR(q_func(x), test::q_oracle(x), 1e-10) << "x=" << x;
  }
}

TEST(QFunc, FrozenValues) {
  EXPECT_DOUBLE_EQ(q_func(0.0), 0.5);
  EXPECT_NEAR(q_func(1.2816), 0.0999915001, 1e-10);
  EXPECT_NEAR(2.0 * q_func(3.0), 2.6997960633e-03, 1e-12);
}

TEST(QFunc, RejectsNonFinite) {
  EXPECT_THROW(q_func(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(q_func(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(QInv, FrozenValue) { EXPECT_NEAR(q_inv(0.025), 1.9599639845, 1e-9); }

TEST(QInv, RoundTripOnLogGrid) {
  for (int k = 0; k <= 300; ++k) {
    const double p = std::pow(10.0, -12.0 + 12.0 * k / 300.0) * (1.0 - 1e-12);
    EXPECT_NEAR(q_func(q_inv(p)), p, 1e-10 * std::max(1.0, p)) << p;
    EXPECT_NEAR(q_func(q_inv(1.0 - p)), 1.0 - p, 1e-10) << p;
  }
}

TEST(QInv, Symmetry) {
  for (double p : {1e-6, 0.01, 0.2, 0.4}) EXPECT_NEAR(q_inv(p), -q_inv(1.0 - p), 1e-9);
  EXPECT_DOUBLE_EQ(q_inv(0.5), 0.0);
}

TEST(QInv, RejectsOutsideOpenInterval) {
  EXPECT_THROW(q_inv(0.0), DomainError);
  EXPECT_THROW(q_inv(1.0), DomainError);
  EXPECT_THROW(q_inv(-0.1), DomainError);
}

TEST(FoldedNormal, CdfMatchesQuadrature) {
  for (double delta : {-3.0, 0.0, 0.7, 2.0, 5.0}) {
    for (double sigma : {0.3, 1.0, 2.5}) {
      for (double x : {0.0, 0.1, 1.0, 2.5, 6.0}) {
        const double oracle = x == 0.0 ? 0.0 : test::simpson([&](double t) { return test::normal_pdf(t, delta, sigma); }, -x, x);
        EXPECT_NEAR(folded_normal_cdf(x, {delta, sigma}), oracle, 1e-10)
            << delta << " " << sigma << " " << x;
      }
    }
  }
}

TEST(FoldedNormal, FrozenMonteCarloValue) {
  // P(|2 + n| <= 1), n ~ N(0, 1); independent estimate at 10^7 draws.
  EXPECT_NEAR(folded_normal_cdf(1.0, {2.0, 1.0}), 0.15737, 5e-4);
}

TEST(FoldedNormal, NegativeArgumentIsZero) { EXPECT_EQ(folded_normal_cdf(-1.0, {0.0, 1.0}), 0.0); }

TEST(FoldedNormal, MomentsMatchQuadrature) {
  for (double delta : {0.0, 0.5, 2.0, -3.0}) {
    for (double sigma : {0.5, 1.0, 2.0}) {
      auto pdf = [&](double t) {
        return test::normal_pdf(t, delta, sigma) + test::normal_pdf(-t, delta, sigma);
      };
      const double hi = std::abs(delta) + 12 * sigma;
      const double m1 = test::simpson([&](double t) { return t * pdf(t); }, 0.0, hi);
      const double m2 = test::simpson([&](double t) { return t * t * pdf(t); }, 0.0, hi);
      const auto m = folded_normal_moments({delta, sigma});
      EXPECT_NEAR(m.mean, m1, 1e-9);
      EXPECT_NEAR(m.variance, m2 - m1 * m1, 1e-9);
    }
  }
}

TEST(FoldedNormal, FrozenMoments) {
  const auto m = folded_normal_moments({2.0, 1.0});
  EXPECT_NEAR(m.mean, 2.01764, 2e-3);
  EXPECT_NEAR(m.variance, 0.93261, 2e-3);
}

TEST(FoldedNormal, PropertyMonotoneBoundedAndEvenInDelta) {
  test::Lcg g(11);
  for (int c = 0; c < 1000; ++c) {
    const double delta = g.uniform(-5, 5);
    const double sigma = g.uniform(0.01, 3);
    const double a = g.uniform(0, 8);
    const double b = a + g.uniform(0, 2);
    const double fa = folded_normal_cdf(a, {delta, sigma});
    const double fb = folded_normal_cdf(b, {delta, sigma});
    ASSERT_GE(fa, 0.0);
    ASSERT_LE(fb, 1.0);
    ASSERT_LE(fa, fb);
    ASSERT_NEAR(fa, folded_normal_cdf(a, {-delta, sigma}), 1e-14);
  }
}

TEST(Rayleigh, Ccdf) {
  EXPECT_DOUBLE_EQ(rayleigh_ccdf(0.0, 2.0), 1.0);
  EXPECT_NEAR(rayleigh_ccdf(2.0, 1.0), std::exp(-2.0), 1e-15);
  EXPECT_THROW(rayleigh_ccdf(-1.0, 1.0), DomainError);
}
