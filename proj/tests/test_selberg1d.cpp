#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "boxmin/selberg1d.hpp"

using boxmin::Interval;
using boxmin::SelbergPair;
using boxmin::Side;
namespace s1 = boxmin::selberg1d;

namespace {

// Composite Simpson on [-L, L].
template <class F>
double simpson(F f, double L, long long n) {
  const double h = 2.0 * L / static_cast<double>(n);
  double s = f(-L) + f(L);
  for (long long i = 1; i < n; ++i) s += f(-L + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST(Selberg1d, MinorantBelowMajorantAboveIndicator) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  const Interval I(-1.3, 2.1);
  for (double delta : {0.5, 1.0, 3.0}) {
    const SelbergPair lo(I, delta, Side::minorant), hi(I, delta, Side::majorant);
    for (int i = 0; i < 3000; ++i) {
      const double x = u(rng);
      const double ind = I.contains(x) ? 1.0 : 0.0;
      EXPECT_LE(s1::evaluate(x, lo), ind + 1e-9) << x;
      EXPECT_GE(s1::evaluate(x, hi), ind - 1e-9) << x;
    }
  }
}

TEST(Selberg1d, IntegralsAgainstQuadrature) {
  const SelbergPair lo(Interval(0.2, 1.7), 2.0, Side::minorant);
  const SelbergPair hi(Interval(0.2, 1.7), 2.0, Side::majorant);
  EXPECT_DOUBLE_EQ(s1::integral(lo), 1.5 - 0.5);
  EXPECT_DOUBLE_EQ(s1::integral(hi), 1.5 + 0.5);
  boxmin::specfun::EvalConfig cfg;
  cfg.series_truncation = 2000;
  // tails decay like x^-2; integral beyond L is below 2/(pi^2 delta^2 L)
  const double L = 400.0;
  const double tail = 2.0 / (M_PI * M_PI * 4.0 * L);
  const double qlo = simpson([&](double x) { return s1::evaluate(x, lo, cfg); }, L, 400'000);
  const double qhi = simpson([&](double x) { return s1::evaluate(x, hi, cfg); }, L, 400'000);
  EXPECT_NEAR(qlo, 1.0, 2 * tail + 1e-4);
  EXPECT_NEAR(qhi, 2.0, 2 * tail + 1e-4);
}

TEST(Selberg1d, ExtremalMinorant) {
  EXPECT_NEAR(s1::extremal_minorant(0.0), 1.0, 1e-15);
  for (int n = 2; n < 20; ++n) {
    EXPECT_NEAR(s1::extremal_minorant(n), 0.0, 1e-15);
    EXPECT_NEAR(s1::extremal_minorant(-n), 0.0, 1e-15);
  }
  EXPECT_NEAR(s1::extremal_minorant(1.0), 0.0, 1e-12);
  EXPECT_NEAR(s1::extremal_minorant(-1.0), 0.0, 1e-12);
  for (double x = 1.01; x < 10.0; x += 0.013) EXPECT_LE(s1::extremal_minorant(x), 1e-15);
  const double q = simpson(s1::extremal_minorant, 3000.0, 3'000'000);
  EXPECT_NEAR(q, 1.0, 1e-6);
}

TEST(Selberg1d, Validation) {
  EXPECT_THROW(Interval(1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(SelbergPair(Interval(0, 1), 0.0, Side::minorant), std::invalid_argument);
}
