#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "boxmin/lowdim.hpp"

using namespace boxmin;

TEST(Lowdim, CornerIntegrals) {
  EXPECT_EQ(lowdim::corner_integral(lowdim::explicit_polynomial(2)), rat(63, 64));
  EXPECT_EQ(lowdim::corner_integral(lowdim::explicit_polynomial(3)), rat(119, 128));
  EXPECT_EQ(lowdim::corner_integral(lowdim::explicit_polynomial(4)), rat(95, 128));
  EXPECT_EQ(lowdim::corner_integral(lowdim::explicit_polynomial(5)), rat(31, 256));
  EXPECT_EQ(lowdim::corner_integral(lowdim::unit_polynomial()), rat(1));
}

TEST(Lowdim, CornerIntegralPreconditions) {
  SymmetricQuartic p(2);
  p.set_coefficient({0, 0}, rat(1));
  EXPECT_THROW(lowdim::corner_integral(p), precondition_error);  // P(u_1) = 1
  EXPECT_THROW(lowdim::explicit_polynomial(6), std::invalid_argument);
}

TEST(Lowdim, EvaluationAtLatticePoints) {
  const auto m = lowdim::explicit_minorant(2);
  const std::vector<double> o = {0.0, 0.0}, c = {1.0, 1.0}, e = {1.0, 0.0}, f = {2.0, 0.0};
  EXPECT_DOUBLE_EQ(lowdim::eval_F(m, o), 1.0);
  EXPECT_NEAR(lowdim::eval_F(m, c), -1.0 / 256.0, 1e-15);
  EXPECT_NEAR(lowdim::eval_F(m, e), 0.0, 1e-15);
  EXPECT_NEAR(lowdim::eval_F(m, f), 0.0, 1e-15);
}

TEST(Lowdim, MinorantBelowIndicatorAtRandomPoints) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 2; n <= 5; ++n) {
    const auto m = lowdim::explicit_minorant(n);
    std::vector<double> x(static_cast<size_t>(n));
    for (int i = 0; i < 5000; ++i) {
      bool inside = true;
      for (auto& v : x) {
        v = u(rng);
        inside = inside && std::abs(v) <= 1.0;
      }
      EXPECT_LE(lowdim::eval_F(m, x), (inside ? 1.0 : 0.0) + 1e-12);
    }
  }
}

TEST(Lowdim, SlicesReduceDimension) {
  const auto p3 = lowdim::explicit_polynomial(3).to_poly();
  EXPECT_EQ(p3.restrict_to_zero(2), lowdim::explicit_polynomial(2).to_poly());
  const auto p5 = lowdim::explicit_polynomial(5).to_poly();
  EXPECT_EQ(p5.restrict_leading(3), p3);
}

TEST(Lowdim, ParallelVerificationMatchesSerial) {
  GridSpec g;
  g.points_per_axis = 31;
  g.interior_samples = 5000;
  g.exterior_samples = 20000;
  for (int n = 2; n <= 4; ++n) {
    const auto p = lowdim::explicit_polynomial(n);
    const auto par = lowdim::verify_admissibility(p, g);
    const auto ser = lowdim::verify_admissibility_serial(p, g);
    EXPECT_EQ(par.interior_max, ser.interior_max);
    EXPECT_EQ(par.exterior_max, ser.exterior_max);
    EXPECT_EQ(par.interior_argmax, ser.interior_argmax);
    EXPECT_EQ(par.exterior_argmax, ser.exterior_argmax);
    EXPECT_EQ(par.exterior_violations, ser.exterior_violations);
    EXPECT_TRUE(par.passed());
  }
}

TEST(Lowdim, VerificationFlagsBadCandidate) {
  SymmetricQuartic p(2);
  p.set_coefficient({0, 0}, rat(1));
  p.set_coefficient({1, 0}, rat(-1, 2));  // P(u_1) = 1/2
  GridSpec g;
  g.points_per_axis = 21;
  g.exterior_samples = 1000;
  const auto r = lowdim::verify_admissibility(p, g);
  EXPECT_FALSE(r.interpolation_conditions);
  EXPECT_GT(r.exterior_violations, 0u);
  EXPECT_FALSE(r.passed());
}

TEST(Lowdim, LatticeInterpolation) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = lowdim::lattice_interpolation_check(lowdim::explicit_minorant(n), 3);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_TRUE(r.matches_integral) << n;
    EXPECT_EQ(r.poisson_total, lowdim::explicit_minorant(n).exact_integral);
    EXPECT_LE(r.max_noncorner_abs, 1e-12);
  }
  EXPECT_THROW(lowdim::lattice_interpolation_check(lowdim::explicit_minorant(2), 1), std::invalid_argument);
}

TEST(Lowdim, Identities) {
  const auto r = lowdim::check_identities(20000, 3);
  EXPECT_TRUE(r.first_matches);
  EXPECT_TRUE(r.second_matches);
  EXPECT_TRUE(r.inequality_holds);
  EXPECT_EQ(r.boundary_excess, 0.0);
}

TEST(Lowdim, GridValidation) {
  GridSpec g;
  g.exterior_radius = 0.5;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = {};
  g.tolerance = -1.0;
  EXPECT_THROW(g.validate(), std::invalid_argument);
}
