#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "boxmin/box.hpp"

using boxmin::Box;
using boxmin::Interval;
using boxmin::Rational;
using boxmin::rat;
namespace bx = boxmin::box;

TEST(Box, MinorantsBelowIndicator) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const Box B({Interval(-1.0, 1.5), Interval(-0.5, 2.0)});
  std::vector<double> x(2);
  for (int i = 0; i < 4000; ++i) {
    x = {u(rng), u(rng)};
    const double ind = B.contains(x) ? 1.0 : 0.0;
    EXPECT_LE(bx::selberg_minorant(x, B, 1.5), ind + 1e-9);
    EXPECT_LE(bx::montgomery_minorant(x, B, 1.5), ind + 1e-9);
  }
}

TEST(Box, ExactCubeIntegrals) {
  EXPECT_EQ(bx::selberg_cube_integral<Rational>(2, rat(2)), rat(5));
  EXPECT_EQ(bx::montgomery_cube_integral<Rational>(1, rat(1)), rat(1));
  // N = 1: both reduce to (b - a) - 1
  EXPECT_EQ(bx::selberg_cube_integral<Rational>(1, rat(3, 2)), rat(2));
  // N <= 2 the two integrals coincide as polynomials in delta
  for (int d = 1; d <= 9; ++d) {
    EXPECT_EQ(bx::selberg_cube_integral<Rational>(2, rat(d, 3)), bx::montgomery_cube_integral<Rational>(2, rat(d, 3)));
  }
}

TEST(Box, SelbergThresholdIsNMinusHalf) {
  for (int n = 1; n <= 8; ++n) {
    const Rational t = rat(2 * n - 1, 2);
    const Rational eps = rat(1, 1'000'000'000);
    EXPECT_EQ(bx::selberg_cube_integral<Rational>(n, t), rat(0)) << n;
    EXPECT_LT(bx::selberg_cube_integral<Rational>(n, t - eps), rat(0)) << n;
    EXPECT_GT(bx::selberg_cube_integral<Rational>(n, t + eps), rat(0)) << n;
    EXPECT_DOUBLE_EQ(bx::selberg_positivity_threshold(n), n - 0.5);
  }
}

TEST(Box, MontgomeryThresholdRoot) {
  for (int n : {3, 5, 10}) {
    const double t = bx::montgomery_positivity_threshold(n);
    EXPECT_LT(bx::montgomery_cube_sign_function(n, t * (1 - 1e-9)), 0.0);
    EXPECT_GT(bx::montgomery_cube_sign_function(n, t * (1 + 1e-9)), 0.0);
  }
  EXPECT_NEAR(bx::montgomery_threshold_slope(), 1.0 / (2.0 * std::log((1 + std::sqrt(5.0)) / 2)), 1e-15);
  EXPECT_NEAR(bx::montgomery_positivity_threshold(50) / 50.0, 1.0397, 0.02);
}

TEST(Box, ThresholdReport) {
  const auto r2 = bx::thresholds(2);
  EXPECT_TRUE(r2.integrals_identical);
  EXPECT_NEAR(r2.montgomery_threshold, 1.5, 1e-9);
  const auto r5 = bx::thresholds(5);
  EXPECT_FALSE(r5.integrals_identical);
  EXPECT_GT(r5.montgomery_threshold, r5.selberg_threshold);
}

TEST(Box, IntegralsMatchClosedFormOnGeneralBox) {
  const Box B({Interval(0.0, 2.0), Interval(-1.0, 3.0), Interval(0.5, 1.5)});
  const std::vector<double> L = {2.0, 4.0, 1.0};
  EXPECT_DOUBLE_EQ(bx::selberg_integral(B), bx::selberg_integral<double>(L));
  EXPECT_DOUBLE_EQ(bx::montgomery_integral(B), bx::montgomery_integral<double>(L));
}

TEST(Box, Validation) {
  EXPECT_THROW(Box(std::vector<Interval>{}), std::invalid_argument);
  const std::vector<double> odd = {0.0, 1.0, 2.0};
  EXPECT_THROW(Box::from_bounds(odd), std::invalid_argument);
  const std::vector<double> x = {0.0};
  EXPECT_THROW(bx::selberg_minorant(x, Box::cube(2, 1.0)), std::invalid_argument);
}
