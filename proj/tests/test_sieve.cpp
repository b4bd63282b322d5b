#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "boxmin/sieve.hpp"

using namespace boxmin;
namespace sv = boxmin::sieve;

TEST(Sieve, LatticeDistance) {
  const std::vector<double> a = {0.3, 0.9}, b = {2.5, -3.25}, c = {1.0, 2.0};
  EXPECT_NEAR(sv::lattice_distance(a), 0.3, 1e-15);
  EXPECT_NEAR(sv::lattice_distance(b), 0.5, 1e-15);
  EXPECT_EQ(sv::lattice_distance(c), 0.0);
}

TEST(Sieve, PointSetValidation) {
  EXPECT_THROW(sv::TorusPointSet(2, {{0.05, 0.95}}, 0.1), std::invalid_argument);
  EXPECT_THROW(sv::TorusPointSet(2, {{0.5}}, 0.1), std::invalid_argument);
  EXPECT_THROW(sv::TorusPointSet(2, {{0.5, 0.5}}, 0.6), std::invalid_argument);
  EXPECT_THROW(sv::TorusPointSet(2, {{NAN, 0.5}}, 0.1), std::invalid_argument);
  const sv::TorusPointSet s(2, {{1.5, -0.5}}, 0.1);
  EXPECT_EQ(s.points()[0], (std::vector<double>{0.5, 0.5}));
}

TEST(Sieve, ExponentialSum) {
  const sv::TorusPointSet s(2, {{0.5, 0.5}, {0.25, 0.5}}, 0.1);
  const std::vector<int> zero = {0, 0}, n = {1, 0};
  EXPECT_NEAR(std::abs(sv::exponential_sum(s, zero)), 2.0, 1e-15);
  const auto z = sv::exponential_sum(s, n);  // e(1/2) + e(1/4) = -1 + i
  EXPECT_NEAR(z.real(), -1.0, 1e-15);
  EXPECT_NEAR(z.imag(), 1.0, 1e-15);
}

TEST(Sieve, PsiEpsilonIsThePeriodizedDilation) {
  const auto F = functions::explicit_construction(2);
  const double eps = 0.25;
  const sv::PsiEpsilon psi(F, eps);
  EXPECT_NEAR(psi.mean(), eps * eps * 63.0 / 64.0, 1e-15);
  // direct periodization sum_m F((x + m) / eps), |F| decays like |y|^-2 per axis
  for (const auto& x : std::vector<std::vector<double>>{{0.0, 0.0}, {0.1, 0.37}, {0.5, 0.5}}) {
    double direct = 0.0;
    const int R = 400;
    for (int a = -R; a <= R; ++a) {
      for (int b = -R; b <= R; ++b) {
        const std::vector<double> y = {(x[0] + a) / eps, (x[1] + b) / eps};
        direct += F(y);
      }
    }
    EXPECT_NEAR(psi(x), direct, 1e-4) << x[0] << " " << x[1];
  }
  // minorant of the eps-box around the lattice: <= 0 away from it
  const std::vector<double> far = {0.5, 0.4};
  EXPECT_LE(psi(far), 1e-12);
}

TEST(Sieve, RatioUsesClosedFormTransform) {
  const auto r = sv::fourier_ratio(functions::explicit_construction(2));
  EXPECT_TRUE(r.exact_transform);
  EXPECT_NEAR(r.transform_at_origin, 63.0 / 64.0, 1e-15);
  EXPECT_GE(r.ratio, 1.0);
  EXPECT_NEAR(r.ratio, functions::explicit_construction(2).transform(r.argmax) / r.transform_at_origin, 1e-12);
  EXPECT_THROW(sv::fourier_ratio(functions::explicit_construction(2), 0.0), std::invalid_argument);
}

TEST(Sieve, BoundsHoldOnRandomSets) {
  const auto ratio = sv::fourier_ratio(functions::explicit_construction(2));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const double eps = 0.1 + 0.03 * static_cast<double>(seed % 5);
    const auto pts = sv::random_point_set(2, 5 + 3 * seed, eps, seed);
    EXPECT_EQ(pts.seed, seed);
    const auto rep = sv::sieve_bounds(pts, ratio, eps);
    EXPECT_TRUE(rep.holds()) << seed;
    EXPECT_EQ(rep.improved_range, static_cast<int>(std::floor(1.0 / eps)));
    EXPECT_EQ(rep.classical_range, static_cast<int>(std::floor(2.0 / eps)));
    EXPECT_NEAR(rep.classical_bound, 3.0 * rep.classical_sum, 1e-12);
  }
  EXPECT_EQ(sv::random_point_set(2, 7, 0.2, 5).points(), sv::random_point_set(2, 7, 0.2, 5).points());
}

TEST(Sieve, ReadersAgree) {
  std::istringstream csv("# pts\n0.5,0.5\n\n0.25, 0.75\n");
  const auto a = sv::read_points_csv(csv, 0.1);
  const auto b = sv::read_points_json(R"({"points": [[0.5, 0.5], [0.25, 0.75]]})", 0.1);
  const auto c = sv::read_points_json("[[0.5, 0.5], [0.25, 0.75]]", 0.1);
  EXPECT_EQ(a.points(), b.points());
  EXPECT_EQ(b.points(), c.points());
  std::istringstream bad("0.5,0.5\n0.5\n");
  EXPECT_THROW(sv::read_points_csv(bad, 0.1), std::invalid_argument);
  EXPECT_THROW(sv::read_points_json("{\"x\": 1}", 0.1), std::invalid_argument);
}
