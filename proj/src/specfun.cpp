#include "boxmin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boxmin::specfun {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

int effective_truncation(double x, const EvalConfig& cfg) {
  const double needed = std::ceil(2.0 * std::abs(x)) + 2.0;
  return std::max(cfg.series_truncation, static_cast<int>(std::min(needed, 1e9)));
}
}  // namespace

void EvalConfig::validate() const {
  if (series_truncation < 16) {
    throw std::invalid_argument("EvalConfig: series_truncation must be >= 16");
  }
  if (!(near_singularity_radius >= 0.0 && near_singularity_radius < 0.25)) {
    throw std::invalid_argument("EvalConfig: near_singularity_radius must lie in [0, 1/4)");
  }
}

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  // r in [-1, 1]; the subtraction is exact for |x| < 2^52.
  double r = x - 2.0 * std::round(0.5 * x);
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double sinc(double x, double radius) {
  if (std::abs(x) < radius) {
    const double u = kPi * x;
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return sin_pi(x) / (kPi * x);
}

double fejer(double x, const EvalConfig& cfg) {
  const double s = sinc(x, cfg.near_singularity_radius);
  return s * s;
}

double sign_approximant(double x, const EvalConfig& cfg) {
  if (x == 0.0) return 0.0;
  const double nearest = std::round(x);
  const int m = static_cast<int>(std::clamp(nearest, -2e9, 2e9));
  const int truncation = effective_truncation(x, cfg);
  const int skip = std::abs(m);

  // Smallest terms first.
  double sum = 0.0;
  for (int n = truncation; n >= 1; --n) {
    const double dn = n;
    if (n == skip) {
      // Only the partner of the extracted nearest-integer pole remains.
      sum += m > 0 ? -1.0 / ((x + dn) * (x + dn)) : 1.0 / ((x - dn) * (x - dn));
    } else {
      const double d = (dn - x) * (dn + x);
      sum += 4.0 * x * dn / (d * d);
    }
  }
  const double edge = truncation + 0.5;
  sum += 2.0 * x / ((edge - x) * (edge + x));

  const double s = sin_pi(x);
  double value = 2.0 * x * fejer(x, cfg) + s * s / kPi2 * sum;
  if (m != 0) value += sgn(nearest) * fejer(x - nearest, cfg);
  return value;
}

double sign_approximant_tail_bound(double x, const EvalConfig& cfg) {
  const double ax = std::abs(x);
  const double t = effective_truncation(x, cfg) + 0.5;
  const double d = (t - ax) * (t + ax);
  // f(t) = 4xt/(t^2-x^2)^2; midpoint remainder <= (|f'(t)| + |f''(t)|)/24.
  const double f1 = 4.0 * ax * (3.0 * t * t + ax * ax) / (d * d * d);
  const double f2 = 48.0 * ax * t * (t * t + ax * ax) / (d * d * d * d);
  const double s = sin_pi(x);
  return 2.0 * (s * s / kPi2) * (f1 + f2) / 24.0;
}

}  // namespace boxmin::specfun
