#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "boxmin/lowdim.hpp"
#include "boxmin/separable.hpp"

using namespace boxmin;

namespace {

// Trapezoid Fourier integral of g_e over [-L, L]; g_e is even.
double brute_transform(int e, double xi, double L, long long n) {
  const double h = L / static_cast<double>(n);
  double s = 0.5 * profile::value(e, 0.0);
  for (long long i = 1; i <= n; ++i) {
    const double x = h * static_cast<double>(i);
    s += (i == n ? 0.5 : 1.0) * profile::value(e, x) * std::cos(2 * M_PI * xi * x);
  }
  return 2.0 * h * s;
}

}  // namespace

TEST(Profile, BoundedByOne) {
  for (int e = 0; e <= 2; ++e) {
    for (double x = -20.0; x <= 20.0; x += 0.0037) {
      EXPECT_LE(std::abs(profile::value(e, x)), 1.0 + 1e-15) << e << " " << x;
    }
  }
}

TEST(Profile, LimitsAtSingularities) {
  EXPECT_DOUBLE_EQ(profile::s_factor(0.0), 1.0);
  EXPECT_NEAR(profile::s_factor(1.0), 0.25, 1e-15);
  EXPECT_NEAR(profile::s_factor(-1.0), 0.25, 1e-15);
  EXPECT_NEAR(profile::s_factor(1.0 + 1e-7), 0.25, 1e-6);
  EXPECT_NEAR(profile::s_factor(1e-7), 1.0, 1e-12);
}

TEST(Profile, TransformMatchesQuadrature) {
  // g_2 decays like x^-2 so its quadrature tail dominates the tolerance
  const double tol[3] = {1e-7, 1e-6, 2e-4};
  for (int e = 0; e <= 2; ++e) {
    for (double xi : {0.0, 0.13, 0.5, 0.87, 1.2}) {
      EXPECT_NEAR(profile::transform(e, xi), brute_transform(e, xi, 2000.0, 800'000), tol[e]) << e << " " << xi;
    }
    EXPECT_EQ(profile::transform(e, 1.0), 0.0);
    EXPECT_EQ(profile::transform(e, -1.5), 0.0);
  }
}

TEST(Profile, JetsMatchFiniteDifferences) {
  const double h = 1e-5;
  for (int e = 0; e <= 2; ++e) {
    for (long long n = -3; n <= 3; ++n) {
      const double x = static_cast<double>(n);
      EXPECT_NEAR(to_double(profile::jet(e, n, 0)), profile::value(e, x), 1e-13);
      const double d = (profile::value(e, x + h) - profile::value(e, x - h)) / (2 * h);
      EXPECT_NEAR(to_double(profile::jet(e, n, 1)), d, 1e-7) << e << " " << n;
    }
  }
}

TEST(Separable, MatchesDirectEvaluation) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 2; n <= 5; ++n) {
    const auto m = lowdim::explicit_minorant(n);
    const auto f = SeparableSP::from_poly(m.polynomial.to_poly());
    EXPECT_TRUE(f.exact());
    EXPECT_EQ(*f.exact_integral(), m.exact_integral);
    std::vector<double> x(static_cast<size_t>(n));
    for (int i = 0; i < 500; ++i) {
      for (auto& v : x) v = u(rng);
      EXPECT_NEAR(f(x), lowdim::eval_F(m, x), 1e-13);
    }
  }
}

TEST(Separable, SliceKeepsRationalCoefficients) {
  const auto f3 = SeparableSP::from_poly(lowdim::explicit_polynomial(3).to_poly());
  const std::vector<std::optional<double>> fix = {std::nullopt, std::nullopt, 0.0};
  const auto s = f3.slice(fix);
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.exact());
  EXPECT_EQ(*s.exact_integral(), rat(63, 64));
  const std::vector<std::optional<double>> all = {1.0, 1.0, 1.0};
  EXPECT_THROW(f3.slice(all), std::invalid_argument);
}

TEST(Separable, MixedJetMatchesFiniteDifference) {
  const auto f = SeparableSP::from_poly(lowdim::explicit_polynomial(2).to_poly());
  const double h = 1e-4;
  const std::vector<int> n = {1, -1};
  auto F = [&](double a, double b) {
    const std::vector<double> x = {a, b};
    return f(x);
  };
  const double dxy = (F(1 + h, -1 + h) - F(1 + h, -1 - h) - F(1 - h, -1 + h) + F(1 - h, -1 - h)) / (4 * h * h);
  EXPECT_NEAR(f.jet(n, 3u), dxy, 1e-6);
  const double dx = (F(1 + h, -1) - F(1 - h, -1)) / (2 * h);
  EXPECT_NEAR(f.jet(n, 1u), dx, 1e-7);
}
