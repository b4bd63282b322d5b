#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "boxmin/rational.hpp"

namespace boxmin {

// Dense univariate polynomial with exact coefficients; coefficients()[k]
// multiplies t^k. Trailing zeros are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(int k) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exponent vector of a monomial in the squares: {e_1,...,e_N} stands for
// prod x_i^(2 e_i), each e_i in {0, 1, 2}.
using Exponents = std::vector<int>;

// Even polynomial in N variables with per-variable degree <= 4, stored
// sparsely over exponent vectors.
class QuarticPoly {
 public:
  explicit QuarticPoly(int dim) : dim_(dim) {}
  static QuarticPoly constant(int dim, const Rational& c);
  // c * x_i^(2 e)
  static QuarticPoly monomial(int dim, int axis, int e, const Rational& c = 1);

  int dim() const { return dim_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  void add_term(const Exponents& e, const Rational& c);

  QuarticPoly& operator+=(const QuarticPoly& o);
  QuarticPoly& operator-=(const QuarticPoly& o);
  QuarticPoly& operator*=(const Rational& s);
  friend QuarticPoly operator+(QuarticPoly a, const QuarticPoly& b) { return a += b; }
  friend QuarticPoly operator-(QuarticPoly a, const QuarticPoly& b) { return a -= b; }
  friend QuarticPoly operator*(QuarticPoly a, const Rational& s) { return a *= s; }
  // Throws std::domain_error if a per-variable exponent would exceed 2.
  friend QuarticPoly operator*(const QuarticPoly& a, const QuarticPoly& b);
  friend bool operator==(const QuarticPoly& a, const QuarticPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  double operator()(std::span<const double> x) const;
  Rational exact(std::span<const Rational> x) const;

  // Substitutes x_axis = 0 and drops that variable.
  QuarticPoly restrict_to_zero(int axis) const;
  // Drops variables from the end, setting them to zero.
  QuarticPoly restrict_leading(int k) const;

 private:
  int dim_;
  std::map<Exponents, Rational> terms_;
};

// Canonical basis element: the multiset with `twos` exponents equal to 2 and
// `ones` exponents equal to 1 (the rest 0). Its monomial symmetric function is
// the sum of prod x_i^(2 e_i) over all distinct placements of the multiset.
struct SymmetricIndex {
  int ones = 0;
  int twos = 0;
  friend auto operator<=>(const SymmetricIndex&, const SymmetricIndex&) = default;
};

// All multisets of size N over {0,1,2}, ordered lexicographically on their
// nonincreasing exponent tuples: (twos, ones) ascending. Size (N+1)(N+2)/2.
std::vector<SymmetricIndex> symmetric_basis(int dim);

// Monomial symmetric functions of z_i = x_i^2 for every basis element, via the
// expansion of prod_i (1 + a z_i + b z_i^2). table[ones][twos].
class MonomialTable {
 public:
  explicit MonomialTable(std::span<const double> x);
  double operator()(int ones, int twos) const;
  int dim() const { return n_; }

 private:
  int n_;
  std::vector<double> t_;
};

// Polynomial invariant under coordinate permutations and sign changes, with
// per-variable degree <= 4, in the canonical symmetric basis.
class SymmetricQuartic {
 public:
  explicit SymmetricQuartic(int dim);
  // coefficients follow symmetric_basis(dim) order.
  SymmetricQuartic(int dim, std::vector<Rational> coefficients);

  // Throws std::invalid_argument if the polynomial is not permutation invariant.
  static SymmetricQuartic from_poly(const QuarticPoly& p);
  QuarticPoly to_poly() const;

  int dim() const { return dim_; }
  const std::vector<SymmetricIndex>& basis() const { return basis_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(SymmetricIndex idx) const;
  void set_coefficient(SymmetricIndex idx, const Rational& c);
  size_t index_of(SymmetricIndex idx) const;

  // Coefficient of the empty multiset.
  const Rational& constant_term() const { return coefficient({0, 0}); }

  double operator()(std::span<const double> x) const;
  Rational exact(std::span<const Rational> x) const;
  // P(u_k) for u_k = (1,...,1,0,...,0) with k ones.
  Rational at_unit_point(int k) const;

  friend bool operator==(const SymmetricQuartic& a, const SymmetricQuartic& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int dim_;
  std::vector<SymmetricIndex> basis_;
  std::vector<Rational> coeffs_;
  std::vector<double> fcoeffs_;
};

// Elementary symmetric function of the squares (quartic = false) or of the
// fourth powers (quartic = true) of x, of order k. Throws std::out_of_range
// unless 1 <= k <= x.size().
double sigma(int k, std::span<const double> x, bool quartic = false);
QuarticPoly sigma_poly(int dim, int k, bool quartic = false);

std::string to_string(const QuarticPoly& p);
// Coefficients in t, lowest degree first: "1 - 2*t + t^2".
std::string to_string(const UniPoly& p);

}  // namespace boxmin
