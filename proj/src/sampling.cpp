#include "boxmin/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/random/sobol.hpp>

namespace boxmin {

QuasiRandom::QuasiRandom(int dims, std::uint64_t seed) : dims_(dims) {
  if (dims < 1) throw std::invalid_argument("QuasiRandom: dims must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  shift_.resize(static_cast<size_t>(dims));
  for (double& s : shift_) s = unif(rng);
}

void QuasiRandom::fill(std::uint64_t first, std::size_t count, std::span<double> out) const {
  const size_t d = static_cast<size_t>(dims_);
  if (out.size() < count * d) throw std::invalid_argument("QuasiRandom::fill: output too small");
  boost::random::sobol engine(static_cast<unsigned>(dims_));
  engine.seed(first);
  constexpr double kScale = 0x1p-64;
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < d; ++j) {
      double u = static_cast<double>(engine()) * kScale + shift_[j];
      u -= std::floor(u);
      if (u >= 1.0) u = 0.0;
      out[i * d + j] = u;
    }
  }
}

std::vector<double> QuasiRandom::point(std::uint64_t index) const {
  std::vector<double> p(static_cast<size_t>(dims_));
  fill(index, 1, p);
  return p;
}

void tensor_grid_point(std::uint64_t index, int per_axis, double lo, double hi, std::span<double> out) {
  if (per_axis < 2) throw std::invalid_argument("tensor grid needs at least 2 nodes per axis");
  const double step = (hi - lo) / (per_axis - 1);
  const auto m = static_cast<std::uint64_t>(per_axis);
  for (size_t i = out.size(); i-- > 0;) {
    const auto k = static_cast<int>(index % m);
    index /= m;
    // the last node is set exactly so the grid includes both endpoints
    out[i] = (k == per_axis - 1) ? hi : lo + k * step;
  }
}

void shell_point(std::span<const double> u, double radius, std::span<double> out) {
  const size_t n = out.size();
  if (u.size() != n + 1) throw std::invalid_argument("shell_point: expected N+1 uniforms");
  double r = 1.0 + (radius - 1.0) * u[0] * u[0];
  if (r <= 1.0) r = std::nextafter(1.0, 2.0);
  const auto face = std::min(static_cast<size_t>(u[1] * 2.0 * static_cast<double>(n)), 2 * n - 1);
  const size_t axis = face / 2;
  const double sign = (face % 2 == 0) ? 1.0 : -1.0;
  size_t k = 2;
  for (size_t i = 0; i < n; ++i) {
    if (i == axis) {
      out[i] = sign * r;
    } else {
      out[i] = (2.0 * u[k++] - 1.0) * r;
    }
  }
}

}  // namespace boxmin
