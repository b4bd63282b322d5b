#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "boxmin/simplex.hpp"

namespace lp = boxmin::lp;

namespace {

lp::RowBlock rows(int n, const std::vector<std::vector<double>>& a, const std::vector<double>& b) {
  lp::RowBlock r(n);
  for (size_t i = 0; i < a.size(); ++i) r.add(a[i], b[i]);
  return r;
}

}  // namespace

TEST(Simplex, SmallBoundedProblem) {
  const std::vector<double> c = {1.0, 1.0};
  const auto A = rows(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}}, {1, 2, 2.5, 0, 0});
  const auto r = lp::maximize(c, lp::RowBlock(2), A);
  ASSERT_EQ(r.status, lp::Status::optimal);
  EXPECT_NEAR(r.objective, 2.5, 1e-10);
  EXPECT_NEAR(r.dual_objective, 2.5, 1e-10);
}

TEST(Simplex, EqualityConstraint) {
  const std::vector<double> c = {1.0, 1.0};
  const auto E = rows(2, {{1, -1}}, {0});
  const auto A = rows(2, {{1, 0}, {0, 1}}, {1, 2});
  const auto r = lp::maximize(c, E, A);
  ASSERT_EQ(r.status, lp::Status::optimal);
  EXPECT_NEAR(r.x[0], 1.0, 1e-10);
  EXPECT_NEAR(r.x[1], 1.0, 1e-10);
  EXPECT_NEAR(r.objective, 2.0, 1e-10);
}

TEST(Simplex, Unbounded) {
  const std::vector<double> c = {1.0, 0.0};
  const auto A = rows(2, {{0, 1}, {-1, 0}}, {1, 0});
  EXPECT_EQ(lp::maximize(c, lp::RowBlock(2), A).status, lp::Status::unbounded);
}

TEST(Simplex, Infeasible) {
  const std::vector<double> c = {1.0};
  const auto A = rows(1, {{1}, {-1}}, {-1, 0});
  EXPECT_EQ(lp::maximize(c, lp::RowBlock(1), A).status, lp::Status::infeasible);
}

TEST(Simplex, DegenerateCycleProne) {
  // Beale's example, which cycles under textbook Dantzig pricing.
  const std::vector<double> c = {0.75, -150, 0.02, -6};
  const auto A = rows(4,
                      {{0.25, -60, -0.04, 9}, {0.5, -90, -0.02, 3}, {0, 0, 1, 0}, {-1, 0, 0, 0},
                       {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
                      {0, 0, 1, 0, 0, 0, 0});
  const auto r = lp::maximize(c, lp::RowBlock(4), A);
  ASSERT_EQ(r.status, lp::Status::optimal);
  EXPECT_NEAR(r.objective, 0.05, 1e-9);
}

TEST(Simplex, RandomFeasiblePolytopesSatisfyStrongDuality) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4;
    lp::RowBlock A(n);
    std::vector<double> row(n);
    for (int i = 0; i < 40; ++i) {
      for (auto& v : row) v = g(rng);
      A.add(row, 1.0);  // the origin is strictly feasible
    }
    std::vector<double> c(n);
    for (auto& v : c) v = g(rng);
    const auto r = lp::maximize(c, lp::RowBlock(n), A);
    if (r.status != lp::Status::optimal) continue;
    EXPECT_NEAR(r.objective, r.dual_objective, 1e-8);
    for (size_t i = 0; i < A.size(); ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += A.row(i)[static_cast<size_t>(j)] * r.x[static_cast<size_t>(j)];
      EXPECT_LE(s, A.b[i] + 1e-9);
    }
  }
}
