#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxmin/polynomial.hpp"

namespace boxmin {

namespace profile {

// sin^2(pi x) / (pi^2 x^2 (x^2 - 1)^2), the one-axis factor of S. Limits: 1 at
// 0, 1/4 at +-1. Evaluated without cancellation near both.
double s_factor(double x);

// g_e(x) = s_factor(x) * x^(2e), e in {0,1,2}. Each is band-limited to [-1,1].
double value(int e, double x);

// Exact Fourier transform of g_e (real and even); zero for |xi| >= 1.
double transform(int e, double xi);

// g_e and g_e' at an integer point, exactly: g_e(0) = [e == 0], g_e(+-1) = 1/4,
// g_e'(+-1) = +-(-3/4, -1/4, 1/4)[e], everything else 0.
Rational jet(int e, long long n, int order);

}  // namespace profile

// F(x) = sum_terms coef * prod_i g_{e_i}(x_i): the product S(x) P(x) expanded
// along the monomials of P. Coefficients are carried exactly while they stay
// rational (slicing at integer coordinates keeps them rational).
class SeparableSP {
 public:
  struct Term {
    Exponents exponents;
    double coef = 0.0;
    std::optional<Rational> exact;
  };

  SeparableSP(int dim, std::vector<Term> terms);
  static SeparableSP from_poly(const QuarticPoly& p);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool exact() const;

  double operator()(std::span<const double> x) const;
  double transform(std::span<const double> xi) const;

  // Exact transform at the origin when all coefficients are rational.
  std::optional<Rational> exact_integral() const;
  double integral() const;

  // Restriction with fixed coordinates (nullopt = free). Fixing every
  // coordinate is rejected.
  SeparableSP slice(std::span<const std::optional<double>> fixed) const;

  // Mixed partial derivative d_j F(n) for j in {0,1}^N (bit i of mask set =
  // differentiate in x_i), exactly when coefficients are rational.
  std::optional<Rational> exact_jet(std::span<const int> n, unsigned mask) const;
  double jet(std::span<const int> n, unsigned mask) const;

  // Sum of |coef|: with |g_e(x)| <= 1 everywhere and
  // |g_e(x)| <= (|x| - 1)^-2 for |x| >= 2, |F| <= amplitude * prod phi(x_i).
  double amplitude() const;

 private:
  int dim_;
  std::vector<Term> terms_;
};

}  // namespace boxmin
