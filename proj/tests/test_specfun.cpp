#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/math/special_functions/trigamma.hpp>

#include "boxmin/specfun.hpp"

namespace sf = boxmin::specfun;

namespace {

// H through the trigamma closed form of the same series:
// sum_{n>=1} 1/(n-x)^2 = psi1(1-x), sum_{n>=1} 1/(n+x)^2 = psi1(1+x).
double sign_by_trigamma(double x) {
  const double s = std::sin(M_PI * x);
  return s * s / (M_PI * M_PI) *
         (boost::math::trigamma(1.0 - x) - boost::math::trigamma(1.0 + x) + 2.0 / x);
}

}  // namespace

TEST(Specfun, SinCosPiExactAtIntegers) {
  for (int n = -50; n <= 50; ++n) {
    EXPECT_EQ(sf::sin_pi(n), 0.0);
    EXPECT_EQ(std::abs(sf::cos_pi(n)), 1.0);
  }
  EXPECT_NEAR(sf::sin_pi(0.5), 1.0, 1e-15);
  EXPECT_NEAR(sf::cos_pi(1.0 / 3.0), 0.5, 1e-15);
}

TEST(Specfun, SincAndFejerLimits) {
  EXPECT_EQ(sf::sinc(0.0), 1.0);
  EXPECT_NEAR(sf::sinc(1e-6), 1.0, 1e-11);
  EXPECT_NEAR(sf::sinc(0.5), 2.0 / M_PI, 1e-15);
  EXPECT_NEAR(sf::fejer(0.5), 4.0 / (M_PI * M_PI), 1e-15);
  EXPECT_EQ(sf::fejer(3.0), 0.0);
}

TEST(Specfun, SignApproximantMatchesTrigammaForm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;
    const double ref = sign_by_trigamma(x);
    EXPECT_NEAR(sf::sign_approximant(x), ref, 1e-9 + sf::sign_approximant_tail_bound(x)) << x;
  }
}

TEST(Specfun, SignApproximantInterpolatesSign) {
  for (int n = -30; n <= 30; ++n) {
    EXPECT_NEAR(sf::sign_approximant(n), sf::sgn(n), 1e-12) << n;
  }
}

TEST(Specfun, SignApproximantContinuousAcrossSingularityWindow) {
  for (double c : {0.0, 1.0, -2.0, 7.0}) {
    const double r = 1e-4;
    const double inside = sf::sign_approximant(c + 0.99 * r);
    const double outside = sf::sign_approximant(c + 1.01 * r);
    EXPECT_NEAR(inside, outside, 1e-5) << c;
  }
}

TEST(Specfun, ErrorBoundedByFejerKernel) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-25.0, 25.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = u(rng);
    EXPECT_LE(std::abs(sf::sign_approximant(x) - sf::sgn(x)), sf::fejer(x) + 1e-9) << x;
  }
}

TEST(Specfun, TailBoundShrinksWithTruncation) {
  sf::EvalConfig small, large;
  small.series_truncation = 100;
  large.series_truncation = 100'000;
  EXPECT_GT(sf::sign_approximant_tail_bound(3.3, small), sf::sign_approximant_tail_bound(3.3, large));
  EXPECT_NEAR(sf::sign_approximant(3.3, small), sf::sign_approximant(3.3, large),
              sf::sign_approximant_tail_bound(3.3, small));
}

TEST(Specfun, ConfigValidation) {
  sf::EvalConfig c;
  c.series_truncation = 4;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.near_singularity_radius = 0.3;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_NO_THROW(sf::EvalConfig{}.validate());
}
