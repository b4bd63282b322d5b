#pragma once

#include "boxmin/specfun.hpp"

namespace boxmin {

struct Interval {
  double a = 0.0;
  double b = 1.0;

  Interval() = default;
  // Throws std::invalid_argument unless b > a.
  Interval(double lo, double hi);

  double length() const { return b - a; }
  bool contains(double x) const { return a <= x && x <= b; }
};

enum class Side { majorant, minorant };

struct SelbergPair {
  Interval interval;
  double delta = 1.0;  // band limit: Fourier support in [-delta, delta]
  Side side = Side::minorant;

  SelbergPair() = default;
  // Throws std::invalid_argument unless delta > 0.
  SelbergPair(Interval i, double band, Side s);
};

namespace selberg1d {

// (H(x-a) + H(b-x)) / 2: approximates the indicator of [a, b] within the
// endpoint kernel below.
double indicator_approximant(double x, const Interval& I, const specfun::EvalConfig& cfg = {});

// (K(x-a) + K(b-x)) / 2, nonnegative.
double endpoint_kernel(double x, const Interval& I, const specfun::EvalConfig& cfg = {});

// Unit-band majorant (approximant + kernel) and minorant (approximant - kernel).
double unit_majorant(double x, const Interval& I, const specfun::EvalConfig& cfg = {});
double unit_minorant(double x, const Interval& I, const specfun::EvalConfig& cfg = {});

// Band-limit delta by dilation: the unit-band function of [delta a, delta b]
// evaluated at delta x.
double evaluate(double x, const SelbergPair& p, const specfun::EvalConfig& cfg = {});

// (b - a) + 1/delta for the majorant, (b - a) - 1/delta for the minorant.
double integral(const SelbergPair& p);

// sin^2(pi x) / ((pi x)^2 (1 - x^2)): a minorant of 1_[-1,1] with integral 1
// that vanishes at every nonzero integer.
double extremal_minorant(double x);

}  // namespace selberg1d
}  // namespace boxmin
