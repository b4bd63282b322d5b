#include "boxmin/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "boxmin/kernels.hpp"

namespace boxmin::sieve {

double lattice_distance(std::span<const double> x) {
  double d = 0.0;
  for (double t : x) d = std::max(d, std::abs(t - std::nearbyint(t)));
  return d;
}

TorusPointSet::TorusPointSet(int dim, std::vector<std::vector<double>> points, double separation)
    : dim_(dim), separation_(separation) {
  if (dim < 1) throw std::invalid_argument("TorusPointSet: dimension must be >= 1");
  if (!(separation > 0.0 && separation < 0.5)) {
    throw std::invalid_argument("TorusPointSet: separation must lie in (0, 1/2)");
  }
  if (points.empty()) throw std::invalid_argument("TorusPointSet: no points");
  for (size_t m = 0; m < points.size(); ++m) {
    auto& p = points[m];
    if (p.size() != static_cast<size_t>(dim)) {
      throw std::invalid_argument("TorusPointSet: point " + std::to_string(m) + " has " + std::to_string(p.size()) +
                                  " coordinates, expected " + std::to_string(dim));
    }
    for (double& t : p) {
      if (!std::isfinite(t)) throw std::invalid_argument("TorusPointSet: non-finite coordinate");
      t -= std::floor(t);
      if (t >= 1.0) t = 0.0;
    }
    if (lattice_distance(p) <= separation) {
      throw std::invalid_argument("TorusPointSet: point " + std::to_string(m) + " lies within " +
                                  std::to_string(separation) + " of the integer lattice");
    }
  }
  points_ = std::move(points);
}

std::complex<double> exponential_sum(std::span<const std::vector<double>> points, std::span<const int> n) {
  double re = 0.0, im = 0.0;
  for (const auto& p : points) {
    if (p.size() != n.size()) throw std::invalid_argument("exponential_sum: dimension mismatch");
    double phase = 0.0;
    for (size_t i = 0; i < n.size(); ++i) {
      double t = n[i] * p[i];
      phase += t - std::floor(t);
    }
    phase -= std::floor(phase);
    re += std::cos(2 * std::numbers::pi * phase);
    im += std::sin(2 * std::numbers::pi * phase);
  }
  return {re, im};
}

std::complex<double> exponential_sum(const TorusPointSet& points, std::span<const int> n) {
  return exponential_sum(std::span<const std::vector<double>>(points.points()), n);
}

namespace {

double half_width(const BandlimitedFunction& F) {
  double w = 0.0;
  for (const auto& I : F.support.intervals()) w = std::max({w, std::abs(I.a), std::abs(I.b)});
  return w;
}

// Transform evaluator: closed form if available, sampled otherwise.
std::function<double(std::span<const double>)> transform_of(const BandlimitedFunction& F, bool& exact) {
  if (F.transform) {
    exact = true;
    return F.transform;
  }
  exact = false;
  const double h = 1.0 / (2.5 * half_width(F));
  auto sampler = std::make_shared<analysis::FourierSampler>(F, h, 200.0);
  return [sampler](std::span<const double> xi) { return (*sampler)(xi).value; };
}

}  // namespace

PsiEpsilon::PsiEpsilon(const BandlimitedFunction& F, double eps) : dim_(F.dimension), eps_(eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("psi_epsilon: eps must lie in (0, 1/2)");
  bool exact = false;
  const auto tf = transform_of(F, exact);
  // |n|_inf < 1/eps
  const int m = static_cast<int>(std::ceil(1.0 / eps)) - 1;
  const double scale = std::pow(eps, dim_);
  std::vector<double> xi(static_cast<size_t>(dim_));
  for (int rho = 0; rho <= m; ++rho) {
    kernels::for_each_in_shell(dim_, rho, [&](std::span<const int> n) {
      for (size_t i = 0; i < xi.size(); ++i) xi[i] = eps * n[i];
      const double c = scale * tf(xi);
      if (c == 0.0) return;
      freq_.emplace_back(n.begin(), n.end());
      coef_.push_back(c);
    });
  }
  std::fill(xi.begin(), xi.end(), 0.0);
  mean_ = scale * tf(xi);
}

double PsiEpsilon::operator()(std::span<const double> x) const {
  if (x.size() != static_cast<size_t>(dim_)) throw std::invalid_argument("psi_epsilon: dimension mismatch");
  // the transforms are even, so only the cosine part survives
  double s = 0.0;
  for (size_t k = 0; k < coef_.size(); ++k) {
    double phase = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      double t = freq_[k][i] * x[i];
      phase += t - std::floor(t);
    }
    phase -= std::floor(phase);
    s += coef_[k] * std::cos(2 * std::numbers::pi * phase);
  }
  return s;
}

double psi_epsilon(std::span<const double> x, const BandlimitedFunction& F, double eps) {
  return PsiEpsilon(F, eps)(x);
}

RatioEstimate fourier_ratio(const BandlimitedFunction& F, double step) {
  if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("fourier_ratio: step must lie in (0, 1]");
  const int dim = F.dimension;
  RatioEstimate out;
  out.grid_step = step;
  bool exact = false;
  const auto tf = transform_of(F, exact);
  out.exact_transform = exact;
  std::vector<double> origin(static_cast<size_t>(dim), 0.0);
  out.transform_at_origin = tf(origin);
  if (!(out.transform_at_origin > 0.0)) throw std::invalid_argument("fourier_ratio: F^(0) must be positive");

  const int per_axis = static_cast<int>(std::llround(2.0 / step)) + 1;
  std::vector<double> nodes(static_cast<size_t>(per_axis));
  for (int i = 0; i < per_axis; ++i) nodes[static_cast<size_t>(i)] = std::min(1.0, -1.0 + i * step);
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= static_cast<std::uint64_t>(per_axis);

  // Separable functions: per-axis transform tables, one product per term.
  std::vector<std::vector<double>> table;
  if (exact && F.separable) {
    table.assign(3, std::vector<double>(nodes.size()));
    for (int e = 0; e < 3; ++e) {
      for (size_t i = 0; i < nodes.size(); ++i) table[static_cast<size_t>(e)][i] = profile::transform(e, nodes[i]);
    }
  }
  struct Best {
    double value = -1.0;
    std::uint64_t index = 0;
  };
  auto body = [&](std::uint64_t lo, std::uint64_t hi, Best& best) {
    std::vector<size_t> idx(static_cast<size_t>(dim));
    std::vector<double> xi(static_cast<size_t>(dim));
    for (std::uint64_t k = lo; k < hi; ++k) {
      std::uint64_t r = k;
      for (int i = dim - 1; i >= 0; --i) {
        idx[static_cast<size_t>(i)] = static_cast<size_t>(r % static_cast<std::uint64_t>(per_axis));
        r /= static_cast<std::uint64_t>(per_axis);
      }
      double v;
      if (!table.empty()) {
        v = 0.0;
        for (const auto& t : F.separable->terms()) {
          double prod = t.coef;
          for (size_t i = 0; i < idx.size(); ++i) prod *= table[static_cast<size_t>(t.exponents[i])][idx[i]];
          v += prod;
        }
      } else {
        for (size_t i = 0; i < idx.size(); ++i) xi[i] = nodes[idx[i]];
        v = tf(xi);
      }
      v = std::abs(v);
      if (v > best.value) best = {v, k};
    }
  };
  auto merge = [](Best& a, const Best& b) {
    if (b.value > a.value) a = b;
  };
  // the sampled fallback caches nothing per call, so keep it on one thread
  const Best best = table.empty() && !exact ? kernels::sweep_serial(total, Best{}, body, merge, 1024)
                                            : kernels::sweep(total, Best{}, body, merge, 1024);

  std::vector<double> x(static_cast<size_t>(dim));
  {
    std::uint64_t r = best.index;
    for (int i = dim - 1; i >= 0; --i) {
      x[static_cast<size_t>(i)] = nodes[static_cast<size_t>(r % static_cast<std::uint64_t>(per_axis))];
      r /= static_cast<std::uint64_t>(per_axis);
    }
  }
  double value = std::abs(tf(x));
  // pattern search, staying inside Q_N
  for (double h = step / 2; h > 1e-9; h /= 2) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < dim; ++i) {
        for (double s : {h, -h}) {
          std::vector<double> y = x;
          y[static_cast<size_t>(i)] = std::clamp(y[static_cast<size_t>(i)] + s, -1.0, 1.0);
          const double v = std::abs(tf(y));
          if (v > value) {
            value = v;
            x = std::move(y);
            moved = true;
          }
        }
      }
    }
  }
  out.ratio = value / out.transform_at_origin;
  out.argmax = x;
  return out;
}

namespace {

double abs_sum(const TorusPointSet& points, int radius) {
  const auto& pts = points.points();
  return kernels::lattice_sum<double>(points.dimension(), radius, [&](std::span<const int> n) {
    bool zero = true;
    for (int v : n) zero = zero && v == 0;
    if (zero) return 0.0;
    return std::abs(exponential_sum(std::span<const std::vector<double>>(pts), n));
  });
}

// floor with a relative slack so that N / eps lands on the intended integer
int range_of(double value) { return static_cast<int>(std::floor(value * (1 + 1e-12))); }

}  // namespace

SieveReport sieve_bounds(const TorusPointSet& points, const RatioEstimate& ratio, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("sieve_bounds: eps must be positive");
  if (!(ratio.transform_at_origin > 0.0)) throw std::invalid_argument("sieve_bounds: F^(0) must be positive");
  for (const auto& p : points.points()) {
    if (lattice_distance(p) <= eps) throw std::invalid_argument("sieve_bounds: a point lies within eps of the lattice");
  }
  SieveReport r;
  r.dimension = points.dimension();
  r.M = points.size();
  r.epsilon = eps;
  r.seed = points.seed;
  r.fourier_ratio = ratio;
  r.classical_range = range_of(r.dimension / eps);
  r.improved_range = range_of(1.0 / eps);
  r.classical_sum = abs_sum(points, r.classical_range);
  r.improved_sum = abs_sum(points, r.improved_range);
  r.classical_bound = 3.0 * r.classical_sum;
  r.improved_bound = ratio.ratio * r.improved_sum;
  return r;
}

SieveReport sieve_bounds(const TorusPointSet& points, const BandlimitedFunction& F, double eps) {
  if (F.dimension != points.dimension()) throw std::invalid_argument("sieve_bounds: dimension mismatch");
  return sieve_bounds(points, fourier_ratio(F), eps);
}

TorusPointSet random_point_set(int dim, std::size_t M, double eps, std::uint64_t seed) {
  if (dim < 1 || M == 0) throw std::invalid_argument("random_point_set: need dim >= 1 and M >= 1");
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("random_point_set: eps must lie in (0, 1/2)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> pts;
  std::vector<double> p(static_cast<size_t>(dim));
  while (pts.size() < M) {
    for (double& t : p) t = u(rng);
    if (lattice_distance(p) > eps) pts.push_back(p);
  }
  TorusPointSet set(dim, std::move(pts), eps);
  set.seed = seed;
  return set;
}

TorusPointSet read_points_csv(std::istream& in, double eps) {
  std::vector<std::vector<double>> pts;
  std::string line;
  int dim = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> p;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        p.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("read_points_csv: bad number on line " + std::to_string(line_no));
      }
    }
    if (dim < 0) dim = static_cast<int>(p.size());
    if (static_cast<int>(p.size()) != dim) {
      throw std::invalid_argument("read_points_csv: line " + std::to_string(line_no) + " has a different column count");
    }
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw std::invalid_argument("read_points_csv: no points");
  return TorusPointSet(dim, std::move(pts), eps);
}

TorusPointSet read_points_json(const std::string& text, double eps) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("read_points_json: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("points")) throw std::invalid_argument("read_points_json: missing \"points\"");
    j = j["points"];
  }
  if (!j.is_array() || j.empty()) throw std::invalid_argument("read_points_json: expected a nonempty array of points");
  std::vector<std::vector<double>> pts;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("read_points_json: each point must be an array");
    std::vector<double> p;
    for (const auto& v : row) {
      if (!v.is_number()) throw std::invalid_argument("read_points_json: coordinates must be numbers");
      p.push_back(v.get<double>());
    }
    pts.push_back(std::move(p));
  }
  const int dim = static_cast<int>(pts.front().size());
  return TorusPointSet(dim, std::move(pts), eps);
}

}  // namespace boxmin::sieve
