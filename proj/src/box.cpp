#include "boxmin/box.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace boxmin {

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw std::invalid_argument("Box: dimension must be >= 1");
}

Box Box::cube(int dim, double half_width) {
  if (dim < 1) throw std::invalid_argument("Box: dimension must be >= 1");
  return Box(std::vector<Interval>(static_cast<size_t>(dim), Interval(-half_width, half_width)));
}

Box Box::from_bounds(std::span<const double> bounds) {
  if (bounds.empty() || bounds.size() % 2 != 0) {
    throw std::invalid_argument("Box: expected an even, nonempty list a1,b1,a2,b2,...");
  }
  std::vector<Interval> v;
  for (size_t i = 0; i < bounds.size(); i += 2) v.emplace_back(bounds[i], bounds[i + 1]);
  return Box(std::move(v));
}

bool Box::contains(std::span<const double> x) const {
  if (x.size() != intervals_.size()) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!intervals_[i].contains(x[i])) return false;
  }
  return true;
}

Box Box::scaled(double s) const {
  std::vector<Interval> v;
  v.reserve(intervals_.size());
  for (const auto& I : intervals_) v.emplace_back(s * I.a, s * I.b);
  return Box(std::move(v));
}

namespace box {

using specfun::EvalConfig;

namespace {

void check_dim(std::span<const double> x, const Box& B) {
  if (static_cast<int>(x.size()) != B.dim()) {
    throw std::invalid_argument("dimension mismatch: point has " + std::to_string(x.size()) +
                                " coordinates, box has " + std::to_string(B.dim()));
  }
}

struct AxisValues {
  double approximant;
  double kernel;
};

std::vector<AxisValues> axis_values(std::span<const double> x, const Box& B, const EvalConfig& cfg) {
  std::vector<AxisValues> v(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const Interval& I = B[static_cast<int>(i)];
    v[i] = {selberg1d::indicator_approximant(x[i], I, cfg), selberg1d::endpoint_kernel(x[i], I, cfg)};
  }
  return v;
}

}  // namespace

double selberg_minorant(std::span<const double> x, const Box& B, const EvalConfig& cfg) {
  check_dim(x, B);
  const auto v = axis_values(x, B, cfg);
  const size_t n = v.size();
  double all = 1.0;
  for (const auto& a : v) all *= a.approximant + a.kernel;
  double value = -static_cast<double>(n - 1) * all;
  for (size_t i = 0; i < n; ++i) {
    double term = v[i].approximant - v[i].kernel;
    for (size_t j = 0; j < n; ++j) {
      if (j != i) term *= v[j].approximant + v[j].kernel;
    }
    value += term;
  }
  return value;
}

double montgomery_minorant(std::span<const double> x, const Box& B, const EvalConfig& cfg) {
  check_dim(x, B);
  const auto v = axis_values(x, B, cfg);
  double p0 = 1.0, p2 = 1.0, p1 = 1.0;
  for (const auto& a : v) {
    p0 *= a.approximant;
    p2 *= a.approximant + 2.0 * a.kernel;
    p1 *= a.approximant + a.kernel;
  }
  return p0 - p2 + p1;
}

double selberg_minorant(std::span<const double> x, const Box& B, double delta, const EvalConfig& cfg) {
  check_dim(x, B);
  std::vector<double> y(x.begin(), x.end());
  for (double& t : y) t *= delta;
  return selberg_minorant(y, B.scaled(delta), cfg);
}

double montgomery_minorant(std::span<const double> x, const Box& B, double delta, const EvalConfig& cfg) {
  check_dim(x, B);
  std::vector<double> y(x.begin(), x.end());
  for (double& t : y) t *= delta;
  return montgomery_minorant(y, B.scaled(delta), cfg);
}

namespace {
std::vector<double> lengths_of(const Box& B) {
  std::vector<double> L;
  for (const auto& I : B.intervals()) L.push_back(I.length());
  return L;
}
}  // namespace

double selberg_integral(const Box& B) {
  const auto L = lengths_of(B);
  return selberg_integral<double>(std::span<const double>(L));
}

double montgomery_integral(const Box& B) {
  const auto L = lengths_of(B);
  return montgomery_integral<double>(std::span<const double>(L));
}

double montgomery_cube_sign_function(int dim, double delta) {
  return 1.0 - std::pow(1.0 + 1.0 / delta, dim) + std::pow(1.0 + 0.5 / delta, dim);
}

double selberg_positivity_threshold(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  return dim - 0.5;
}

double montgomery_positivity_threshold(int dim, double tol) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  double lo = 0.1;
  double hi = 4.0 * dim;
  const double f_lo = montgomery_cube_sign_function(dim, lo);
  const double f_hi = montgomery_cube_sign_function(dim, hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw std::runtime_error("montgomery_positivity_threshold: no sign change on [0.1, 4N] for N=" +
                             std::to_string(dim));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (montgomery_cube_sign_function(dim, mid) < 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  const double probe = std::max(1e-6 * root, 10.0 * tol);
  if (!(montgomery_cube_sign_function(dim, root - probe) < 0.0 &&
        montgomery_cube_sign_function(dim, root + probe) > 0.0)) {
    throw std::runtime_error("montgomery_positivity_threshold: post-check failed for N=" + std::to_string(dim));
  }
  return root;
}

double montgomery_threshold_slope() {
  return 1.0 / (2.0 * std::log(std::numbers::phi));
}

Comparison compare(int dim, double delta, double tie_tolerance) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  Comparison c;
  c.selberg = selberg_cube_integral<double>(dim, delta);
  c.montgomery = montgomery_cube_integral<double>(dim, delta);
  const double scale = std::max({1.0, std::abs(c.selberg), std::abs(c.montgomery)});
  if (std::abs(c.selberg - c.montgomery) <= tie_tolerance * scale) {
    c.winner = Winner::tie;
  } else {
    c.winner = c.selberg > c.montgomery ? Winner::selberg : Winner::montgomery;
  }
  return c;
}

ThresholdReport thresholds(int dim, double tol) {
  ThresholdReport r;
  r.dimension = dim;
  r.selberg_threshold = selberg_positivity_threshold(dim);
  r.montgomery_threshold = montgomery_positivity_threshold(dim, tol);
  r.montgomery_below_selberg = r.montgomery_threshold < r.selberg_threshold - 10.0 * tol;

  // The difference is a polynomial of degree <= N in delta; vanishing at
  // N + 1 distinct points means it vanishes identically.
  r.integrals_identical = true;
  for (int k = 1; k <= dim + 1; ++k) {
    const Rational d = rat(k, 2);
    if (selberg_cube_integral<Rational>(dim, d) != montgomery_cube_integral<Rational>(dim, d)) {
      r.integrals_identical = false;
      break;
    }
  }
  if (!r.integrals_identical) {
    auto diff = [dim](double d) {
      return selberg_cube_integral<double>(dim, d) - montgomery_cube_integral<double>(dim, d);
    };
    constexpr int kSteps = 4000;
    const double top = 4.0 * dim;
    double prev_x = top / kSteps;
    double prev = diff(prev_x);
    for (int i = 2; i <= kSteps; ++i) {
      const double x = top * i / kSteps;
      const double cur = diff(x);
      if ((prev < 0.0) != (cur < 0.0)) {
        double lo = prev_x, hi = x;
        const bool lo_negative = prev < 0.0;
        while (hi - lo > tol * std::max(1.0, hi)) {
          const double mid = 0.5 * (lo + hi);
          ((diff(mid) < 0.0) == lo_negative ? lo : hi) = mid;
        }
        r.crossover_delta = 0.5 * (lo + hi);
        break;
      }
      prev_x = x;
      prev = cur;
    }
  }
  return r;
}

const char* to_string(Winner w) {
  switch (w) {
    case Winner::selberg: return "selberg";
    case Winner::montgomery: return "montgomery";
    case Winner::tie: return "tie";
  }
  return "tie";
}

}  // namespace box
}  // namespace boxmin
