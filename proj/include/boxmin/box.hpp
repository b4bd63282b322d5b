#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxmin/rational.hpp"
#include "boxmin/selberg1d.hpp"

namespace boxmin {

class Box {
 public:
  // Throws std::invalid_argument on an empty list (intervals validate themselves).
  explicit Box(std::vector<Interval> intervals);
  // [-half_width, half_width]^dim
  static Box cube(int dim, double half_width);
  // Parses a flat list a1,b1,a2,b2,...
  static Box from_bounds(std::span<const double> bounds);

  int dim() const { return static_cast<int>(intervals_.size()); }
  const Interval& operator[](int i) const { return intervals_[static_cast<size_t>(i)]; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool contains(std::span<const double> x) const;
  Box scaled(double s) const;

 private:
  std::vector<Interval> intervals_;
};

namespace box {

// Tensor-product minorant built from per-axis majorants C_i and minorants c_i:
//   -(N-1) prod C_i + sum_n c_n prod_{m != n} C_m.
// Fourier support in [-1,1]^N. Throws std::invalid_argument on dimension mismatch.
double selberg_minorant(std::span<const double> x, const Box& B, const specfun::EvalConfig& cfg = {});

// prod V_i - prod (V_i + 2 E_i) + prod (V_i + E_i), with V the indicator
// approximant and E the endpoint kernel of each axis.
double montgomery_minorant(std::span<const double> x, const Box& B, const specfun::EvalConfig& cfg = {});

// Band limit delta: the unit-band construction of delta*B evaluated at delta*x.
double selberg_minorant(std::span<const double> x, const Box& B, double delta, const specfun::EvalConfig& cfg = {});
double montgomery_minorant(std::span<const double> x, const Box& B, double delta, const specfun::EvalConfig& cfg = {});

// Exact closed-form integrals in terms of the side lengths. T is double or Rational.
template <class T>
T selberg_integral(std::span<const T> lengths) {
  const size_t n = lengths.size();
  T all = 1;
  for (const T& L : lengths) all *= (L + 1);
  T value = -T(static_cast<long long>(n) - 1) * all;
  for (size_t i = 0; i < n; ++i) {
    T term = lengths[i] - 1;
    for (size_t j = 0; j < n; ++j) {
      if (j != i) term *= (lengths[j] + 1);
    }
    value += term;
  }
  return value;
}

template <class T>
T montgomery_integral(std::span<const T> lengths) {
  T p0 = 1, p2 = 1, p1 = 1;
  for (const T& L : lengths) {
    p0 *= L;
    p2 *= (L + 2);
    p1 *= (L + 1);
  }
  return p0 - p2 + p1;
}

double selberg_integral(const Box& B);
double montgomery_integral(const Box& B);

// Integrals for B = [-delta, delta]^N.
template <class T>
T selberg_cube_integral(int dim, const T& delta) {
  std::vector<T> lengths(static_cast<size_t>(dim), 2 * delta);
  return selberg_integral<T>(std::span<const T>(lengths));
}
template <class T>
T montgomery_cube_integral(int dim, const T& delta) {
  std::vector<T> lengths(static_cast<size_t>(dim), 2 * delta);
  return montgomery_integral<T>(std::span<const T>(lengths));
}

// Normalised Montgomery cube integral 1 - (1 + 1/delta)^N + (1 + 1/(2 delta))^N,
// which has the sign of the integral and does not overflow for large N.
double montgomery_cube_sign_function(int dim, double delta);

// Selberg cube integral is positive iff delta > N - 1/2.
double selberg_positivity_threshold(int dim);

// Positive root of the Montgomery cube integral, by bisection on [0.1, 4N].
// Throws std::runtime_error if the bracket shows no sign change or the
// post-check around the root fails.
double montgomery_positivity_threshold(int dim, double tol = 1e-12);

// Limit of montgomery_positivity_threshold(N) / N as N grows: 1 / (2 log phi).
double montgomery_threshold_slope();

enum class Winner { selberg, montgomery, tie };

struct Comparison {
  double selberg = 0.0;
  double montgomery = 0.0;
  Winner winner = Winner::tie;
};

Comparison compare(int dim, double delta, double tie_tolerance = 1e-12);

struct ThresholdReport {
  int dimension = 0;
  double selberg_threshold = 0.0;
  double montgomery_threshold = 0.0;
  // delta > 0 where the two cube integrals tie, when a sign change of their
  // difference exists; empty otherwise.
  std::optional<double> crossover_delta;
  // The two cube integrals agree as polynomials in delta (N <= 2).
  bool integrals_identical = false;
  bool montgomery_below_selberg = false;
};

ThresholdReport thresholds(int dim, double tol = 1e-12);

const char* to_string(Winner w);

}  // namespace box
}  // namespace boxmin
