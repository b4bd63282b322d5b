#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "boxmin/analysis.hpp"

using namespace boxmin;

TEST(Analysis, PoissonSumEqualsIntegral) {
  for (int n = 2; n <= 3; ++n) {
    const auto F = functions::explicit_construction(n);
    const std::vector<double> t(static_cast<size_t>(n), 0.3);
    const auto r = analysis::poisson_sum(F, t, 40);
    ASSERT_TRUE(r.defect.has_value());
    EXPECT_TRUE(r.within_bound()) << r.sum << " " << r.tail_bound;
    EXPECT_NEAR(r.sum, to_double(*F.known_integral), r.tail_bound + 1e-12);
  }
}

TEST(Analysis, PoissonParallelMatchesSerial) {
  const auto F = functions::explicit_construction(2);
  const std::vector<double> t = {0.17, 0.61};
  EXPECT_EQ(analysis::poisson_sum(F, t, 30).sum, analysis::poisson_sum_serial(F, t, 30).sum);
}

TEST(Analysis, PoissonRejectsBadInput) {
  const auto F = functions::explicit_construction(2);
  const std::vector<double> t1 = {0.0};
  const std::vector<double> t2 = {0.0, 0.0};
  EXPECT_THROW(analysis::poisson_sum(F, t1, 5), std::invalid_argument);
  EXPECT_THROW(analysis::poisson_sum(F, t2, 0), std::invalid_argument);
}

TEST(Analysis, FundamentalInequalityEqualityCase) {
  const auto r = analysis::fundamental_inequality(functions::explicit_construction(3), 3);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality_case);  // nonzero corner values
  EXPECT_EQ(*r.exact_transform_at_origin, rat(119, 128));
  const auto e = analysis::fundamental_inequality(functions::extremal_1d(), 20);
  EXPECT_TRUE(e.holds);
  EXPECT_TRUE(e.equality_case);
}

TEST(Analysis, InterpolationReproducesFunction) {
  const auto F = functions::explicit_construction(2);
  const auto jet = analysis::exact_jet(*F.separable);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int i = 0; i < 300; ++i) {
    const std::vector<double> x = {u(rng), u(rng)};
    EXPECT_NEAR(analysis::interpolate(jet, x), F(x), 1e-10);
  }
}

TEST(Analysis, NumericJetAgreesWithExact) {
  const auto F = functions::explicit_construction(2);
  const auto exact = analysis::exact_jet(*F.separable);
  const auto numeric = analysis::numeric_jet(F, 1);
  for (const auto& [key, value] : numeric.entries) {
    const auto it = exact.entries.find(key);
    const double ref = it == exact.entries.end() ? 0.0 : it->second;
    EXPECT_NEAR(value, ref, 1e-5);
  }
}

TEST(Analysis, NumericFourierMatchesClosedForm) {
  const auto F = functions::explicit_construction(2);
  const analysis::FourierSampler sampler(F, 0.25, 300.0);
  for (const auto& xi : std::vector<std::vector<double>>{{0.0, 0.0}, {0.3, -0.2}, {0.9, 0.1}, {1.5, 0.0}, {2.2, -1.7}}) {
    const auto e = sampler(xi);
    EXPECT_NEAR(e.value, F.transform(xi), 5e-5);
    EXPECT_NEAR(e.value, analysis::numeric_fourier(F, xi, 0.25, 300.0).value, 1e-12);
  }
}

TEST(Analysis, NumericFourierRejectsCoarseStep) {
  const auto F = functions::explicit_construction(2);
  const std::vector<double> xi = {0.0, 0.0};
  EXPECT_THROW(analysis::numeric_fourier(F, xi, 0.5), std::invalid_argument);
}

TEST(Analysis, SliceOfF3IsF2) {
  const auto F3 = functions::explicit_construction(3);
  const auto F2 = functions::explicit_construction(2);
  const std::vector<std::optional<double>> fix = {std::nullopt, std::nullopt, 0.0};
  const auto s = analysis::slice(F3, fix);
  ASSERT_TRUE(s.monotone.has_value());
  EXPECT_TRUE(*s.monotone);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const std::vector<double> x = {u(rng), u(rng)};
    EXPECT_NEAR(s.function(x), F2(x), 1e-12);
  }
}

TEST(Analysis, FunctionInvariants) {
  EXPECT_NO_THROW(functions::fejer().validate());
  EXPECT_NO_THROW(functions::extremal_1d().validate());
  EXPECT_NO_THROW(functions::selberg_box(Box::cube(2, 1.0), 2.0).validate());
  // band 2 on [-1,1]^2 is the unit-band function of [-2,2]^2 scaled by 1/4
  EXPECT_NEAR(*functions::selberg_box(Box::cube(2, 1.0), 2.0).integral(), 1.25, 1e-12);
  EXPECT_NEAR(*functions::selberg_box(Box::cube(2, 2.0), 1.0).integral(), 5.0, 1e-12);
}
