#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "boxmin/lpsearch.hpp"

using namespace boxmin;
namespace ls = boxmin::lpsearch;

namespace {

std::vector<double> as_doubles(const SymmetricQuartic& p) {
  std::vector<double> c;
  for (const auto& r : p.coefficients()) c.push_back(to_double(r));
  return c;
}

}  // namespace

TEST(LPSearch, ModelShape) {
  for (auto [n, size] : {std::pair{1, 3}, {2, 6}, {5, 21}}) {
    ls::SamplingSpec s;
    s.interior_points_per_axis = 5;
    s.exterior_points_per_axis = 5;
    s.escape_points_per_axis = 3;
    const auto m = ls::build_model(n, s);
    EXPECT_EQ(m.basis.size(), static_cast<size_t>(size));
    EXPECT_EQ(m.objective.size(), static_cast<size_t>(size));
    EXPECT_EQ(m.origins.size(), m.inequalities.size());
    EXPECT_EQ(m.equalities.n, size);
  }
  EXPECT_THROW(ls::build_model(0), std::invalid_argument);
  EXPECT_THROW(ls::build_model(6), std::invalid_argument);
}

TEST(LPSearch, ObjectiveIsCornerIntegral) {
  for (int n = 2; n <= 5; ++n) {
    ls::SamplingSpec s;
    s.interior_points_per_axis = 3;
    s.exterior_points_per_axis = 3;
    s.escape_points_per_axis = 3;
    const auto m = ls::build_model(n, s);
    const auto p = lowdim::explicit_polynomial(n);
    EXPECT_NEAR(ls::objective_of(m, as_doubles(p)), to_double(lowdim::corner_integral(p)), 1e-14);
    EXPECT_LE(ls::max_row_violation(m, as_doubles(p)), 1e-12) << n;
  }
}

TEST(LPSearch, BasisAndEscapeRows) {
  const auto basis = symmetric_basis(2);
  const std::vector<double> x = {0.5, 2.0};
  const auto row = ls::basis_row(basis, x);
  const MonomialTable m(x);
  for (size_t b = 0; b < basis.size(); ++b) EXPECT_DOUBLE_EQ(row[b], m(basis[b].ones, basis[b].twos));
  // x_1 -> infinity with x_2 = y: leading coefficient multiplies x_1^4
  const std::vector<double> y = {0.7};
  const auto esc = ls::escape_row(basis, 1, y);
  const auto p = lowdim::explicit_polynomial(2);
  double lead = 0.0;
  for (size_t b = 0; b < basis.size(); ++b) lead += esc[b] * to_double(p.coefficients()[b]);
  const double big = 1e4;
  const std::vector<double> far = {big, 0.7};
  EXPECT_NEAR(p(far) / std::pow(big, 4), lead, 1e-6);
}

TEST(LPSearch, ReferencePolynomialsCertify) {
  for (int n = 1; n <= 3; ++n) {
    GridSpec g;
    g.points_per_axis = 21;
    g.exterior_samples = 20000;
    const auto r = ls::certify_candidate(as_doubles(ls::reference_polynomial(n)), n, g);
    EXPECT_TRUE(r.passed()) << n;
  }
}

TEST(LPSearch, ToPolynomialIsExactForDyadicCoefficients) {
  const auto p = lowdim::explicit_polynomial(3);
  EXPECT_EQ(ls::to_polynomial(as_doubles(p), 3), p);
}

TEST(LPSearch, SolveOneDimension) {
  auto model = ls::build_model(1);
  const auto r = ls::solve(model);
  ASSERT_EQ(r.status, lp::Status::optimal);
  EXPECT_NEAR(r.objective_value, 1.0, 1e-6);
  ASSERT_TRUE(r.verified_objective.has_value());
  EXPECT_NEAR(*r.verified_objective, 1.0, 1e-6);
  EXPECT_NEAR(r.recomputed_objective, r.objective_value, 1e-9);
}

TEST(LPSearch, SolveTwoDimensionsBeatsExplicitConstruction) {
  auto model = ls::build_model(2);
  const auto r = ls::solve(model);
  ASSERT_EQ(r.status, lp::Status::optimal);
  ASSERT_TRUE(r.verified_objective.has_value());
  EXPECT_GE(*r.verified_objective, 63.0 / 64.0 - 1e-6);
  EXPECT_NEAR(r.objective_value, r.dual_objective, 1e-7);
  EXPECT_LE(*r.verified_objective, 1.0);
}

TEST(LPSearch, SamplingValidation) {
  ls::SamplingSpec s;
  s.interior_points_per_axis = 1;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = {};
  s.quasi_random_checks = s.max_check_points + 1;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = {};
  s.exterior_shells = {0.5};
  EXPECT_THROW(s.validate(), std::invalid_argument);
}
