#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "boxmin/polynomial.hpp"

using namespace boxmin;

namespace {

// Brute-force monomial symmetric function: sum over all placements of the
// multiset (twos of exponent 2, ones of exponent 1) on distinct variables.
double brute_monomial(const std::vector<double>& x, int ones, int twos) {
  const int n = static_cast<int>(x.size());
  double total = 0.0;
  std::vector<int> e(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int o, int t) -> void {
    if (i == n) {
      if (o == 0 && t == 0) {
        double p = 1.0;
        for (int k = 0; k < n; ++k) p *= std::pow(x[k] * x[k], e[k]);
        total += p;
      }
      return;
    }
    for (int v = 0; v <= 2; ++v) {
      if ((v == 1 && o == 0) || (v == 2 && t == 0)) continue;
      e[i] = v;
      self(self, i + 1, o - (v == 1), t - (v == 2));
    }
    e[i] = 0;
  };
  rec(rec, 0, ones, twos);
  return total;
}

}  // namespace

TEST(Polynomial, BasisSizes) {
  EXPECT_EQ(symmetric_basis(1).size(), 3u);
  EXPECT_EQ(symmetric_basis(2).size(), 6u);
  EXPECT_EQ(symmetric_basis(5).size(), 21u);
  const auto b = symmetric_basis(2);
  EXPECT_EQ(b.front(), (SymmetricIndex{0, 0}));
  EXPECT_EQ(b.back(), (SymmetricIndex{0, 2}));
}

TEST(Polynomial, MonomialTableMatchesBruteForce) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 1; n <= 5; ++n) {
    std::vector<double> x(static_cast<size_t>(n));
    for (auto& v : x) v = u(rng);
    const MonomialTable m(x);
    for (const auto& idx : symmetric_basis(n)) {
      const double ref = brute_monomial(x, idx.ones, idx.twos);
      EXPECT_NEAR(m(idx.ones, idx.twos), ref, 1e-12 * (1 + std::abs(ref))) << n;
    }
  }
}

TEST(Polynomial, SymmetricRoundTripAndEvaluation) {
  std::vector<Rational> c = {1, rat(-1), rat(1, 3), rat(2), rat(-1, 16), rat(5, 7)};
  const SymmetricQuartic p(2, c);
  const QuarticPoly q = p.to_poly();
  EXPECT_EQ(SymmetricQuartic::from_poly(q), p);
  const std::vector<double> x = {0.7, -1.3};
  EXPECT_NEAR(p(x), q(x), 1e-13);
  const std::vector<Rational> xr = {rat(7, 10), rat(-13, 10)};
  EXPECT_EQ(p.exact(xr), q.exact(xr));
}

TEST(Polynomial, NonSymmetricRejected) {
  QuarticPoly q = QuarticPoly::monomial(2, 0, 1);
  EXPECT_THROW(SymmetricQuartic::from_poly(q), std::invalid_argument);
}

TEST(Polynomial, ProductDegreeLimit) {
  const QuarticPoly a = QuarticPoly::monomial(1, 0, 2);
  EXPECT_THROW(a * a, std::domain_error);
  const QuarticPoly b = QuarticPoly::monomial(1, 0, 1);
  EXPECT_EQ(b * b, a);
}

TEST(Polynomial, ElementarySymmetric) {
  const std::vector<double> x = {1.0, 2.0, 3.0};
  EXPECT_DOUBLE_EQ(sigma(1, x), 14.0);
  EXPECT_DOUBLE_EQ(sigma(2, x), 4.0 + 9.0 + 36.0);
  EXPECT_DOUBLE_EQ(sigma(3, x), 36.0);
  EXPECT_DOUBLE_EQ(sigma(1, x, true), 1.0 + 16.0 + 81.0);
  EXPECT_THROW(sigma(4, x), std::out_of_range);
  EXPECT_NEAR(sigma_poly(3, 2)(x), sigma(2, x), 1e-12);
}

TEST(Polynomial, UnitPointsAndUnivariate) {
  const UniPoly p{1, -2, 1};
  EXPECT_EQ(to_string(p), "1 - 2*t + t^2");
  EXPECT_EQ(p(rat(1)), rat(0));
  EXPECT_EQ((p * p).degree(), 4);
  const UniPoly z = p - p;
  EXPECT_EQ(z.degree(), -1);
}
