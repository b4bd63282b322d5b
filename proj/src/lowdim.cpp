#include "boxmin/lowdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boxmin/kernels.hpp"
#include "boxmin/sampling.hpp"

namespace boxmin {

void GridSpec::validate() const {
  if (points_per_axis != 0 && points_per_axis < 2) {
    throw std::invalid_argument("GridSpec: points_per_axis must be 0 or >= 2");
  }
  if (!(exterior_radius > 1.0)) throw std::invalid_argument("GridSpec: exterior_radius must exceed 1");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("GridSpec: tolerance must be >= 0");
  if (escape_points_per_axis < 2) throw std::invalid_argument("GridSpec: escape_points_per_axis must be >= 2");
}

bool VerificationReport::passed() const {
  if (interior_violations != 0 || exterior_violations != 0) return false;
  for (const auto& e : escape) {
    if (!e.passed) return false;
  }
  return true;
}

bool lowdim::LatticeReport::passed() const {
  return std::abs(origin_value - 1.0) <= tolerance && max_noncorner_abs <= tolerance && matches_integral;
}

namespace lowdim {

double eval_S(std::span<const double> x) {
  double s = 1.0;
  for (double t : x) s *= profile::s_factor(t);
  return s;
}

SymmetricQuartic explicit_polynomial(int dim) {
  if (dim < 2 || dim > 5) {
    throw std::invalid_argument("explicit_polynomial: dimension must be 2, 3, 4 or 5 (got " + std::to_string(dim) + ")");
  }
  QuarticPoly p = QuarticPoly::constant(dim, 1);
  for (int i = 0; i < dim; ++i) {
    p = p * (QuarticPoly::constant(dim, 1) - QuarticPoly::monomial(dim, i, 1));
  }
  if (dim >= 4) p -= sigma_poly(dim, 4) * rat(3, 4);
  p -= sigma_poly(dim, 2, true) * rat(1, 16);
  return SymmetricQuartic::from_poly(p);
}

PaperMinorant explicit_minorant(int dim) {
  PaperMinorant m;
  m.dimension = dim;
  m.polynomial = explicit_polynomial(dim);
  m.exact_integral = corner_integral(m.polynomial);
  m.name = "F" + std::to_string(dim);
  return m;
}

SymmetricQuartic unit_polynomial() { return SymmetricQuartic(1, {Rational(1), Rational(-1), Rational(0)}); }

namespace {

void check_dim(const SymmetricQuartic& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.dim()) {
    throw std::invalid_argument("dimension mismatch: point has " + std::to_string(x.size()) +
                                " coordinates, polynomial has " + std::to_string(p.dim()));
  }
}

BigInt binomial(int n, int k) {
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace

double eval_F(const SymmetricQuartic& p, std::span<const double> x) {
  check_dim(p, x);
  const double s = eval_S(x);
  if (s == 0.0) return 0.0;
  return s * p(x);
}

double eval_F(const PaperMinorant& m, std::span<const double> x) { return eval_F(m.polynomial, x); }

Rational corner_integral(const SymmetricQuartic& p) {
  if (p.at_unit_point(0) != 1) {
    throw precondition_error("corner_integral: requires P(0) = 1, got " + to_string(p.at_unit_point(0)));
  }
  if (p.at_unit_point(1) != 0) {
    throw precondition_error("corner_integral: requires P(u_1) = 0, got " + to_string(p.at_unit_point(1)));
  }
  Rational total = 1;
  const int n = p.dim();
  for (int k = 2; k <= n; ++k) {
    total += Rational(binomial(n, k)) / Rational(BigInt(1) << k) * p.at_unit_point(k);
  }
  return total;
}

std::vector<double> unit_point(int dim, int k) {
  if (k < 0 || k > dim) throw std::out_of_range("unit_point: k out of range");
  std::vector<double> u(static_cast<size_t>(dim), 0.0);
  std::fill(u.begin(), u.begin() + k, 1.0);
  return u;
}

namespace {

struct SweepPartial {
  std::uint64_t count = 0;
  double max = -std::numeric_limits<double>::infinity();
  std::vector<double> argmax;
  std::uint64_t violations = 0;
  std::vector<Violation> recorded;
};

void merge_partial(SweepPartial& into, SweepPartial& from, size_t cap) {
  into.count += from.count;
  if (from.max > into.max) {
    into.max = from.max;
    into.argmax = std::move(from.argmax);
  }
  into.violations += from.violations;
  for (auto& v : from.recorded) {
    if (into.recorded.size() >= cap) break;
    into.recorded.push_back(std::move(v));
  }
}

void observe(SweepPartial& p, std::span<const double> x, double value, double limit, bool interior, size_t cap) {
  ++p.count;
  if (value > p.max) {
    p.max = value;
    p.argmax.assign(x.begin(), x.end());
  }
  if (value > limit) {
    ++p.violations;
    if (p.recorded.size() < cap) p.recorded.push_back({std::vector<double>(x.begin(), x.end()), value, interior});
  }
}

template <bool Parallel>
void run_sweeps(const SymmetricQuartic& p, const GridSpec& grid, VerificationReport& r) {
  const int n = p.dim();
  const size_t d = static_cast<size_t>(n);
  const size_t cap = grid.max_recorded_violations;
  const double tol = grid.tolerance;

  auto run = [&](std::uint64_t count, auto&& body) {
    auto merge = [cap](SweepPartial& a, SweepPartial& b) { merge_partial(a, b, cap); };
    if constexpr (Parallel) return kernels::sweep(count, SweepPartial{}, body, merge);
    else return kernels::sweep_serial(count, SweepPartial{}, body, merge);
  };

  // interior: tensor grid then quasi-random points
  std::uint64_t tensor = 0;
  if (grid.points_per_axis >= 2) {
    tensor = 1;
    for (int i = 0; i < n; ++i) tensor *= static_cast<std::uint64_t>(grid.points_per_axis);
  }
  const QuasiRandom qin(n, grid.seed);
  auto interior_body = [&](std::uint64_t first, std::uint64_t last, SweepPartial& part) {
    std::vector<double> x(d);
    std::vector<double> u;
    if (last > tensor) {
      const std::uint64_t q0 = std::max(first, tensor) - tensor;
      u.resize((last - std::max(first, tensor)) * d);
      qin.fill(q0, static_cast<size_t>(last - std::max(first, tensor)), u);
    }
    for (std::uint64_t i = first; i < last; ++i) {
      if (i < tensor) {
        tensor_grid_point(i, grid.points_per_axis, -1.0, 1.0, x);
      } else {
        const size_t off = static_cast<size_t>(i - std::max(first, tensor)) * d;
        for (size_t j = 0; j < d; ++j) x[j] = 2.0 * u[off + j] - 1.0;
      }
      observe(part, x, eval_F(p, x), 1.0 + tol, true, cap);
    }
  };
  SweepPartial in = run(tensor + grid.interior_samples, interior_body);

  const QuasiRandom qout(n + 1, grid.seed ^ 0x9e3779b97f4a7c15ULL);
  auto exterior_body = [&](std::uint64_t first, std::uint64_t last, SweepPartial& part) {
    std::vector<double> x(d);
    std::vector<double> u(static_cast<size_t>(last - first) * (d + 1));
    qout.fill(first, static_cast<size_t>(last - first), u);
    for (std::uint64_t i = first; i < last; ++i) {
      shell_point(std::span<const double>(u).subspan(static_cast<size_t>(i - first) * (d + 1), d + 1),
                  grid.exterior_radius, x);
      observe(part, x, eval_F(p, x), tol, false, cap);
    }
  };
  SweepPartial out = run(grid.exterior_samples, exterior_body);

  r.interior_samples = in.count;
  r.interior_max = in.count ? in.max : 0.0;
  r.interior_argmax = in.argmax;
  r.interior_violations = in.violations;
  r.exterior_samples = out.count;
  r.exterior_max = out.count ? out.max : 0.0;
  r.exterior_argmax = out.argmax;
  r.exterior_violations = out.violations;
  r.violations = std::move(in.recorded);
  for (auto& v : out.recorded) {
    if (r.violations.size() >= cap) break;
    r.violations.push_back(std::move(v));
  }
}

// Coefficient of prod_{i<k} x_i^4 in P, as a polynomial in the other N-k
// coordinates, evaluated at y.
double leading_coefficient(const SymmetricQuartic& p, int k, std::span<const double> y) {
  const MonomialTable m(y);
  double sum = 0.0;
  for (size_t b = 0; b < p.basis().size(); ++b) {
    const auto idx = p.basis()[b];
    if (idx.twos < k) continue;
    const double c = to_double(p.coefficients()[b]);
    if (c != 0.0) sum += c * m(idx.ones, idx.twos - k);
  }
  return sum;
}

std::vector<EscapeCheck> escape_checks(const SymmetricQuartic& p, const GridSpec& grid) {
  std::vector<EscapeCheck> checks;
  const int n = p.dim();
  for (int k = 1; k <= n; ++k) {
    EscapeCheck c;
    c.coordinates_at_infinity = k;
    const int rest = n - k;
    std::uint64_t count = 1;
    for (int i = 0; i < rest; ++i) count *= static_cast<std::uint64_t>(grid.escape_points_per_axis);
    struct Part {
      double max = -std::numeric_limits<double>::infinity();
      std::vector<double> arg;
    };
    auto body = [&](std::uint64_t first, std::uint64_t last, Part& part) {
      std::vector<double> y(static_cast<size_t>(rest));
      for (std::uint64_t i = first; i < last; ++i) {
        if (rest > 0) tensor_grid_point(i, grid.escape_points_per_axis, 0.0, grid.exterior_radius, y);
        const double v = leading_coefficient(p, k, y);
        if (v > part.max) {
          part.max = v;
          part.arg = y;
        }
      }
    };
    auto merge = [](Part& a, Part& b) {
      if (b.max > a.max) {
        a.max = b.max;
        a.arg = std::move(b.arg);
      }
    };
    Part res = kernels::sweep(count, Part{}, body, merge);
    c.samples = count;
    c.max_leading = res.max;
    c.argmax = res.arg;
    c.passed = res.max <= grid.tolerance;
    checks.push_back(std::move(c));
  }
  return checks;
}

VerificationReport make_report(const SymmetricQuartic& p, const GridSpec& grid, const std::string& name) {
  grid.validate();
  VerificationReport r;
  r.construction = name;
  r.dimension = p.dim();
  r.tolerance = grid.tolerance;
  r.interpolation_conditions = p.at_unit_point(0) == 1 && p.at_unit_point(1) == 0;
  return r;
}

}  // namespace

VerificationReport verify_admissibility(const SymmetricQuartic& p, const GridSpec& grid, const std::string& name) {
  VerificationReport r = make_report(p, grid, name);
  run_sweeps<true>(p, grid, r);
  r.escape = escape_checks(p, grid);
  return r;
}

VerificationReport verify_admissibility(const PaperMinorant& m, const GridSpec& grid) {
  return verify_admissibility(m.polynomial, grid, m.name);
}

VerificationReport verify_admissibility_serial(const SymmetricQuartic& p, const GridSpec& grid,
                                               const std::string& name) {
  VerificationReport r = make_report(p, grid, name);
  run_sweeps<false>(p, grid, r);
  return r;
}

IdentityReport check_identities(std::uint64_t samples, std::uint64_t seed) {
  IdentityReport r;
  r.target = UniPoly{1, -2, 1, 0, rat(-1, 16)};
  r.first_form = UniPoly{1, -1} * UniPoly{1, -1} - UniPoly{0, 0, 0, 0, rat(1, 16)};
  r.second_form = UniPoly{-2, 1} * UniPoly{-2, 1} * UniPoly{4, -4, -1} * rat(1, 16);
  r.first_matches = r.first_form == r.target;
  r.second_matches = r.second_form == r.target;

  auto excess = [](std::span<const double> x) {
    const double s2 = sigma(2, x), s3 = sigma(3, x);
    const double rhs = x[0] * x[0] * x[1] * x[1] + x[2] * x[2] * x[3] * x[3];
    return s2 - s3 - rhs;
  };
  const std::vector<double> ones(4, 1.0);
  r.boundary_excess = excess(ones);

  // |x_i| in [1, 10] with random signs; the expression is even in each x_i
  const QuasiRandom q(4, seed);
  struct Part {
    double max = -std::numeric_limits<double>::infinity();
    std::vector<double> arg;
  };
  auto body = [&](std::uint64_t first, std::uint64_t last, Part& part) {
    std::vector<double> u(static_cast<size_t>(last - first) * 4);
    q.fill(first, static_cast<size_t>(last - first), u);
    std::vector<double> x(4);
    for (std::uint64_t i = first; i < last; ++i) {
      for (size_t j = 0; j < 4; ++j) x[j] = 1.0 + 9.0 * u[static_cast<size_t>(i - first) * 4 + j];
      const double v = excess(x);
      if (v > part.max) {
        part.max = v;
        part.arg = x;
      }
    }
  };
  auto merge = [](Part& a, Part& b) {
    if (b.max > a.max) {
      a.max = b.max;
      a.arg = std::move(b.arg);
    }
  };
  Part res = kernels::sweep(samples, Part{}, body, merge);
  r.inequality_samples = samples;
  r.inequality_max_excess = std::max(res.max, r.boundary_excess);
  r.inequality_argmax = res.max >= r.boundary_excess ? res.arg : ones;
  // relative slack: the sampled values reach ~1e8
  r.inequality_holds = r.inequality_max_excess <= 1e-12 * 1e8 && r.boundary_excess == 0.0;
  return r;
}

LatticeReport lattice_interpolation_check(const SymmetricQuartic& p, int radius) {
  if (radius < 2) throw std::invalid_argument("lattice_interpolation_check: radius must be >= 2");
  const int n = p.dim();
  LatticeReport r;
  r.dimension = n;
  r.radius = radius;
  const std::vector<double> origin(static_cast<size_t>(n), 0.0);
  r.origin_value = eval_F(p, origin);
  r.corner_sum = 0;
  std::vector<double> x(static_cast<size_t>(n));
  for (int rho = 1; rho <= radius; ++rho) {
    kernels::for_each_in_shell(n, rho, [&](std::span<const int> pt) {
      ++r.checked_points;
      int nonzero = 0;
      for (int v : pt) nonzero += v != 0;
      const bool corner = rho == 1 && nonzero >= 2;
      if (corner) {
        // S = 4^-k at a point with k entries +-1; P depends only on k
        const Rational value = p.at_unit_point(nonzero) / Rational(BigInt(1) << (2 * nonzero));
        r.corners.push_back({std::vector<int>(pt.begin(), pt.end()), value});
        r.corner_sum += value;
        return;
      }
      for (size_t i = 0; i < x.size(); ++i) x[i] = pt[i];
      const double v = std::abs(eval_F(p, x));
      if (v > r.max_noncorner_abs || r.max_noncorner_point.empty()) {
        r.max_noncorner_abs = std::max(v, r.max_noncorner_abs);
        r.max_noncorner_point.assign(pt.begin(), pt.end());
      }
    });
  }
  r.poisson_total = p.at_unit_point(0) + r.corner_sum;
  try {
    r.matches_integral = r.poisson_total == corner_integral(p) && p.at_unit_point(0) == 1;
  } catch (const precondition_error&) {
    r.matches_integral = false;
  }
  return r;
}

LatticeReport lattice_interpolation_check(const PaperMinorant& m, int radius) {
  return lattice_interpolation_check(m.polynomial, radius);
}

}  // namespace lowdim
}  // namespace boxmin
