#include "boxmin/selberg1d.hpp"

#include <cmath>
#include <stdexcept>

namespace boxmin {

Interval::Interval(double lo, double hi) : a(lo), b(hi) {
  if (!(hi > lo)) throw std::invalid_argument("Interval: requires b > a");
}

SelbergPair::SelbergPair(Interval i, double band, Side s) : interval(i), delta(band), side(s) {
  if (!(band > 0.0) || !std::isfinite(band)) throw std::invalid_argument("SelbergPair: requires delta > 0");
}

namespace selberg1d {

using specfun::EvalConfig;

double indicator_approximant(double x, const Interval& I, const EvalConfig& cfg) {
  return 0.5 * specfun::sign_approximant(x - I.a, cfg) + 0.5 * specfun::sign_approximant(I.b - x, cfg);
}

double endpoint_kernel(double x, const Interval& I, const EvalConfig& cfg) {
  return 0.5 * specfun::fejer(x - I.a, cfg) + 0.5 * specfun::fejer(I.b - x, cfg);
}

double unit_majorant(double x, const Interval& I, const EvalConfig& cfg) {
  return indicator_approximant(x, I, cfg) + endpoint_kernel(x, I, cfg);
}

double unit_minorant(double x, const Interval& I, const EvalConfig& cfg) {
  return indicator_approximant(x, I, cfg) - endpoint_kernel(x, I, cfg);
}

double evaluate(double x, const SelbergPair& p, const EvalConfig& cfg) {
  const Interval dilated{p.delta * p.interval.a, p.delta * p.interval.b};
  const double y = p.delta * x;
  return p.side == Side::majorant ? unit_majorant(y, dilated, cfg) : unit_minorant(y, dilated, cfg);
}

double integral(const SelbergPair& p) {
  const double correction = 1.0 / p.delta;
  return p.side == Side::majorant ? p.interval.length() + correction : p.interval.length() - correction;
}

double extremal_minorant(double x) {
  constexpr double kWindow = 1e-4;
  const double ax = std::abs(x);
  if (ax < 0.5) {
    const double s = specfun::sinc(x, kWindow);
    return s * s / (1.0 - x * x);
  }
  // With u = |x| - 1: sin^2(pi x) = sin^2(pi u) and 1 - x^2 = -u (2 + u), so
  // the value is -sinc(u)^2 u / (x^2 (2 + u)); no cancellation near |x| = 1.
  const double u = ax - 1.0;
  const double s = specfun::sinc(u, kWindow);
  return -s * s * u / (x * x * (2.0 + u));
}

}  // namespace selberg1d
}  // namespace boxmin
