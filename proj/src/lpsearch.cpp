#include "boxmin/lpsearch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "boxmin/kernels.hpp"
#include "boxmin/sampling.hpp"

namespace boxmin::lpsearch {

void SamplingSpec::validate() const {
  if (interior_points_per_axis < 2) throw std::invalid_argument("SamplingSpec: interior_points_per_axis must be >= 2");
  if (exterior_points_per_axis < 2) throw std::invalid_argument("SamplingSpec: exterior_points_per_axis must be >= 2");
  if (escape_points_per_axis < 2) throw std::invalid_argument("SamplingSpec: escape_points_per_axis must be >= 2");
  if (exterior_shells.empty()) throw std::invalid_argument("SamplingSpec: at least one exterior shell is required");
  for (double r : exterior_shells) {
    if (!(r >= 1.0)) throw std::invalid_argument("SamplingSpec: exterior shells must be >= 1");
  }
  if (!(escape_radius > 0.0)) throw std::invalid_argument("SamplingSpec: escape_radius must be > 0");
  if (quasi_random_checks > max_check_points) throw std::invalid_argument("SamplingSpec: quasi_random_checks exceeds max_check_points");
  if (round_limit < 0) throw std::invalid_argument("SamplingSpec: round_limit must be >= 0");
  if (refine_factor < 1) throw std::invalid_argument("SamplingSpec: refine_factor must be >= 1");
  if (max_interior_rows < 1 || max_check_points < 1) throw std::invalid_argument("SamplingSpec: caps must be >= 1");
}

const char* to_string(RowKind k) {
  switch (k) {
    case RowKind::interior: return "interior";
    case RowKind::exterior: return "exterior";
    case RowKind::escape: return "escape";
    case RowKind::tangent: return "tangent";
  }
  return "interior";
}

std::vector<double> basis_row(const std::vector<SymmetricIndex>& basis, std::span<const double> x) {
  const MonomialTable m(x);
  std::vector<double> row(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) row[b] = m(basis[b].ones, basis[b].twos);
  return row;
}

std::vector<double> escape_row(const std::vector<SymmetricIndex>& basis, int k, std::span<const double> y) {
  const MonomialTable m(y);
  std::vector<double> row(basis.size(), 0.0);
  for (size_t b = 0; b < basis.size(); ++b) {
    if (basis[b].twos >= k) row[b] = m(basis[b].ones, basis[b].twos - k);
  }
  return row;
}

namespace {

struct Sample {
  RowKind kind;
  int k;  // escape coordinates
  std::vector<double> point;
};

// Scaled row and right-hand side for a sample: a . p <= rhs.
void make_row(const std::vector<SymmetricIndex>& basis, const Sample& s, std::vector<double>& row, double& rhs) {
  switch (s.kind) {
    case RowKind::interior: {
      row = basis_row(basis, s.point);
      const double S = lowdim::eval_S(s.point);
      for (double& v : row) v *= S;
      rhs = 1.0;
      break;
    }
    case RowKind::exterior:
      row = basis_row(basis, s.point);
      rhs = 0.0;
      break;
    case RowKind::escape:
      row = escape_row(basis, s.k, s.point);
      rhs = 0.0;
      break;
    case RowKind::tangent:
      // y^2 terms of m_b(1, y, 0, ...): one exponent-1 slot on y, the other
      // slot on the 1
      row.assign(basis.size(), 0.0);
      for (size_t b = 0; b < basis.size(); ++b) {
        const auto [ones, twos] = basis[b];
        if ((ones == 1 && twos == 0) || (ones == 2 && twos == 0) || (ones == 1 && twos == 1)) row[b] = 1.0;
      }
      rhs = 0.0;
      break;
  }
  double scale = 0.0;
  for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale > 0.0) {
    for (double& v : row) v /= scale;
    rhs /= scale;
  }
}

std::vector<double> nodes(int count, double lo, double hi) {
  std::vector<double> v(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  v.back() = hi;
  return v;
}

// Number of nonincreasing tuples of length len over `count` nodes.
double chamber_count(int count, int len) {
  double c = 1.0;
  for (int i = 1; i <= len; ++i) c = c * (count + i - 1) / i;
  return c;
}

// Visits nonincreasing tuples (descending node values), lexicographically.
void for_each_sorted(const std::vector<double>& v, int len, const std::function<void(const std::vector<double>&)>& fn) {
  std::vector<double> t(static_cast<size_t>(len));
  std::function<void(int, size_t)> rec = [&](int pos, size_t max_index) {
    if (pos == len) {
      fn(t);
      return;
    }
    for (size_t i = max_index + 1; i-- > 0;) {
      t[static_cast<size_t>(pos)] = v[i];
      rec(pos + 1, i);
    }
  };
  rec(0, v.size() - 1);
}

// Quasi-random points in the chamber r >= y_1 >= ... >= y_len >= 0.
void sorted_quasi_random(int len, double r, std::uint64_t count, std::uint64_t seed,
                         const std::function<void(const std::vector<double>&)>& fn) {
  if (len == 0) {
    fn({});
    return;
  }
  const QuasiRandom q(len, seed);
  std::vector<double> u(static_cast<size_t>(len));
  for (std::uint64_t i = 0; i < count; ++i) {
    q.fill(i, 1, u);
    for (double& x : u) x *= r;
    std::sort(u.begin(), u.end(), std::greater<>());
    fn(u);
  }
}

std::vector<double> unit_point(int dim) {
  std::vector<double> u(static_cast<size_t>(dim), 0.0);
  u[0] = 1.0;
  return u;
}

// Interior, exterior and escape sample families at a given density.
struct Density {
  int interior;
  int exterior;
  int escape;
  std::vector<double> shells;
};

std::vector<double> refined_shells(const std::vector<double>& shells, int factor) {
  std::vector<double> s = shells;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<double> out;
  for (size_t i = 0; i < s.size(); ++i) {
    out.push_back(s[i]);
    if (i + 1 < s.size()) {
      for (int j = 1; j < factor; ++j) out.push_back(s[i] + (s[i + 1] - s[i]) * j / factor);
    }
  }
  return out;
}

// Generates samples. `cap` limits each family; beyond it interior points are
// thinned by a Kronecker sequence (model rows) or replaced by quasi-random
// points (check sets, thin = false).
std::vector<Sample> generate(int dim, const Density& d, double escape_radius, std::uint64_t cap,
                             std::uint64_t seed, bool thin) {
  std::vector<Sample> out;
  // interior chamber 1 >= x_1 >= ... >= x_N >= 0
  {
    const auto v = nodes(d.interior, 0.0, 1.0);
    const double total = chamber_count(d.interior, dim);
    if (total <= static_cast<double>(cap)) {
      for_each_sorted(v, dim, [&](const std::vector<double>& x) { out.push_back({RowKind::interior, 0, x}); });
    } else if (thin) {
      const double keep = static_cast<double>(cap) / total;
      const double shift = QuasiRandom(1, seed).shift()[0];
      std::uint64_t i = 0;
      for_each_sorted(v, dim, [&](const std::vector<double>& x) {
        bool structural = true;
        for (double t : x) structural = structural && (t == 0.0 || t == 1.0);
        double u = shift + static_cast<double>(i++) * (std::numbers::phi - 1.0);
        u -= std::floor(u);
        if (structural || u < keep) out.push_back({RowKind::interior, 0, x});
      });
    } else {
      sorted_quasi_random(dim, 1.0, cap, seed, [&](const std::vector<double>& x) {
        out.push_back({RowKind::interior, 0, x});
      });
    }
  }
  // exterior faces: x_1 = r, r >= x_2 >= ... >= 0
  {
    const double per_shell = chamber_count(d.exterior, dim - 1);
    const double total = per_shell * static_cast<double>(d.shells.size());
    const bool grid = total <= static_cast<double>(cap);
    const std::uint64_t qcount = std::max<std::uint64_t>(1, cap / d.shells.size());
    for (double r : d.shells) {
      auto emit = [&](const std::vector<double>& y) {
        std::vector<double> x;
        x.push_back(r);
        x.insert(x.end(), y.begin(), y.end());
        out.push_back({RowKind::exterior, 0, x});
      };
      if (grid) {
        if (dim == 1) emit({});
        else for_each_sorted(nodes(d.exterior, 0.0, r), dim - 1, emit);
      } else {
        sorted_quasi_random(dim - 1, r, qcount, seed + 17, emit);
      }
    }
  }
  if (dim >= 2) out.push_back({RowKind::tangent, 0, unit_point(dim)});
  // escape regimes
  for (int k = 1; k <= dim; ++k) {
    const int rest = dim - k;
    auto emit = [&](const std::vector<double>& y) { out.push_back({RowKind::escape, k, y}); };
    if (rest == 0) {
      emit({});
    } else if (chamber_count(d.escape, rest) <= static_cast<double>(cap)) {
      for_each_sorted(nodes(d.escape, 0.0, escape_radius), rest, emit);
    } else {
      sorted_quasi_random(rest, escape_radius, cap, seed + 31, emit);
    }
  }
  return out;
}

// Quasi-random points in the interior chamber and in the exterior region
// 1 < |x|_inf <= escape_radius. Each family is split over the chamber faces
// x_1 = ... = x_k (k = 1..N), where tangencies of symmetric polynomials tend
// to sit; the exterior radius is drawn denser near the boundary.
std::vector<Sample> quasi_random_checks(int dim, std::uint64_t count, double escape_radius, std::uint64_t seed) {
  std::vector<Sample> out;
  const std::uint64_t per_face = std::max<std::uint64_t>(1, count / static_cast<std::uint64_t>(dim));
  for (int k = 1; k <= dim; ++k) {
    const int rest = dim - k;
    const QuasiRandom q(rest + 1, seed + static_cast<std::uint64_t>(k));
    std::vector<double> u(static_cast<size_t>(rest + 1));
    for (std::uint64_t i = 0; i < per_face; ++i) {
      q.fill(i, 1, u);
      std::vector<double> tail(u.begin() + 1, u.end());
      std::sort(tail.begin(), tail.end(), std::greater<>());
      // interior: x_1 = ... = x_k = t, the rest below t
      std::vector<double> x(static_cast<size_t>(k), u[0]);
      for (double v : tail) x.push_back(v * u[0]);
      out.push_back({RowKind::interior, 0, x});
      const double r = 1.0 + (escape_radius - 1.0) * u[0] * u[0];
      std::vector<double> y(static_cast<size_t>(k), r);
      for (double v : tail) y.push_back(v * r);
      out.push_back({RowKind::exterior, 0, std::move(y)});
    }
  }
  return out;
}

void append_rows(LPModel& model, const std::vector<Sample>& samples) {
  const size_t n = model.basis.size();
  const size_t first = model.inequalities.size();
  model.inequalities.a.resize((first + samples.size()) * n);
  model.inequalities.b.resize(first + samples.size());
  auto body = [&](std::uint64_t lo, std::uint64_t hi, int&) {
    std::vector<double> row;
    double rhs = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      make_row(model.basis, samples[static_cast<size_t>(i)], row, rhs);
      std::copy(row.begin(), row.end(), model.inequalities.a.begin() + static_cast<std::ptrdiff_t>((first + i) * n));
      model.inequalities.b[first + i] = rhs;
    }
  };
  kernels::sweep(samples.size(), 0, body, [](int&, int&) {}, 2048);
  for (const auto& s : samples) model.origins.push_back({s.kind, s.k, s.point});
}

Density base_density(const SamplingSpec& s) {
  return {s.interior_points_per_axis, s.exterior_points_per_axis, s.escape_points_per_axis, s.exterior_shells};
}

Density scaled_density(const SamplingSpec& s, int factor) {
  auto f = [factor](int p) { return (p - 1) * factor + 1; };
  return {f(s.interior_points_per_axis), f(s.exterior_points_per_axis), f(s.escape_points_per_axis),
          refined_shells(s.exterior_shells, factor)};
}

void fill_model(LPModel& m, const Density& d) {
  m.inequalities = lp::RowBlock(static_cast<int>(m.basis.size()));
  m.origins.clear();
  append_rows(m, generate(m.dimension, d, m.sampling.escape_radius, m.sampling.max_interior_rows, m.sampling.seed, true));
}

BigInt binomial(int n, int k) {
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace

LPModel build_model(int dim, const SamplingSpec& sampling) {
  if (dim < 1 || dim > 5) throw std::invalid_argument("build_model: dimension must be in 1..5");
  sampling.validate();
  LPModel m;
  m.dimension = dim;
  m.sampling = sampling;
  m.basis = symmetric_basis(dim);
  const size_t n = m.basis.size();

  // integral = 1 + sum_{k>=2} C(N,k) 2^-k P(u_k), and P(u_k) is linear in the
  // coefficients with weight = number of placements inside the first k slots.
  m.objective.assign(n, Rational(0));
  for (int k = 2; k <= dim; ++k) {
    for (size_t b = 0; b < n; ++b) {
      std::vector<Rational> e(n, Rational(0));
      e[b] = 1;
      const Rational weight = SymmetricQuartic(dim, e).at_unit_point(k);
      m.objective[b] += Rational(binomial(dim, k)) / Rational(BigInt(1) << k) * weight;
    }
  }

  m.equalities = lp::RowBlock(static_cast<int>(n));
  std::vector<double> origin(n, 0.0), unit(n, 0.0);
  for (size_t b = 0; b < n; ++b) {
    const auto idx = m.basis[b];
    if (idx.ones == 0 && idx.twos == 0) origin[b] = 1.0;
    if (idx.ones + idx.twos <= 1) unit[b] = 1.0;
  }
  m.equalities.add(origin, 1.0);
  m.equalities.add(unit, 0.0);

  fill_model(m, base_density(sampling));
  return m;
}

double objective_of(const LPModel& model, std::span<const double> coeffs) {
  double v = to_double(model.objective_constant);
  for (size_t b = 0; b < model.objective.size(); ++b) v += to_double(model.objective[b]) * coeffs[b];
  return v;
}

double max_row_violation(const LPModel& model, std::span<const double> coeffs) {
  double worst = 0.0;
  const size_t n = model.basis.size();
  for (size_t i = 0; i < model.equalities.size(); ++i) {
    double s = -model.equalities.b[i];
    for (size_t j = 0; j < n; ++j) s += model.equalities.row(i)[j] * coeffs[j];
    worst = std::max(worst, std::abs(s));
  }
  for (size_t i = 0; i < model.inequalities.size(); ++i) {
    double s = -model.inequalities.b[i];
    const auto row = model.inequalities.row(i);
    for (size_t j = 0; j < n; ++j) s += row[j] * coeffs[j];
    worst = std::max(worst, s);
  }
  return worst;
}

GridSpec default_certify_grid(int dim) {
  GridSpec g;
  static const int per_axis[] = {0, 100'001, 1001, 101, 32, 16};
  g.points_per_axis = per_axis[std::clamp(dim, 1, 5)];
  g.interior_samples = dim >= 4 ? 200'000 : 0;
  g.exterior_samples = 1'000'000;
  g.exterior_radius = 6.0;
  g.seed = 20240601;
  return g;
}

SymmetricQuartic reference_polynomial(int dim) {
  if (dim == 1) return lowdim::unit_polynomial();
  return lowdim::explicit_polynomial(dim);
}

SymmetricQuartic to_polynomial(std::span<const double> coeffs, int dim) {
  std::vector<Rational> c;
  for (double v : coeffs) c.emplace_back(v);
  return SymmetricQuartic(dim, std::move(c));
}

VerificationReport certify_candidate(std::span<const double> coeffs, int dim, const GridSpec& grid) {
  for (double v : coeffs) {
    if (!std::isfinite(v)) throw std::invalid_argument("certify_candidate: coefficients must be finite");
  }
  const SymmetricQuartic p = to_polynomial(coeffs, dim);
  VerificationReport r = lowdim::verify_admissibility(p, grid, "lp candidate");
  // corner formula (in floating point: the coefficients are not exact) and the
  // finite lattice sum it should equal
  double corner = to_double(p.at_unit_point(0));
  for (int k = 2; k <= dim; ++k) {
    corner += to_double(Rational(binomial(dim, k)) / Rational(BigInt(1) << k) * p.at_unit_point(k));
  }
  r.corner_integral = corner;
  std::vector<double> x(static_cast<size_t>(dim));
  r.lattice_sum = kernels::lattice_sum_serial<double>(dim, 2, [&](std::span<const int> n) {
    for (size_t i = 0; i < x.size(); ++i) x[i] = n[i];
    return lowdim::eval_F(p, x);
  });
  return r;
}

VerificationReport certify_candidate(std::span<const double> coeffs, int dim) {
  return certify_candidate(coeffs, dim, default_certify_grid(dim));
}

namespace {

struct Cut {
  double violation;
  std::uint64_t index;
};

std::vector<Sample> find_cuts(const LPModel& model, std::span<const double> p, const std::vector<Sample>& checks,
                              double tol, std::uint64_t limit, double& worst) {
  using Part = std::vector<Cut>;
  auto body = [&](std::uint64_t lo, std::uint64_t hi, Part& part) {
    std::vector<double> row;
    double rhs = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      make_row(model.basis, checks[static_cast<size_t>(i)], row, rhs);
      double s = -rhs;
      for (size_t j = 0; j < row.size(); ++j) s += row[j] * p[j];
      if (s > tol) part.push_back({s, i});
    }
  };
  auto merge = [](Part& a, Part& b) { a.insert(a.end(), b.begin(), b.end()); };
  Part all = kernels::sweep(checks.size(), Part{}, body, merge, 4096);
  auto order = [](const Cut& a, const Cut& b) {
    return a.violation != b.violation ? a.violation > b.violation : a.index < b.index;
  };
  std::sort(all.begin(), all.end(), order);
  worst = all.empty() ? 0.0 : all.front().violation;
  if (all.size() > limit) all.resize(static_cast<size_t>(limit));
  std::vector<Sample> cuts;
  for (const auto& c : all) cuts.push_back(checks[static_cast<size_t>(c.index)]);
  return cuts;
}

}  // namespace

LPResult solve(LPModel& model, const GridSpec& certify_grid, const lp::SimplexOptions& opt) {
  if (model.basis.empty() || model.equalities.size() == 0) throw std::invalid_argument("solve: empty model");
  LPResult res;
  std::vector<double> c(model.objective.size());
  for (size_t b = 0; b < c.size(); ++b) c[b] = to_double(model.objective[b]);

  const SamplingSpec& s = model.sampling;
  std::vector<Sample> checks =
      generate(model.dimension, scaled_density(s, s.refine_factor), s.escape_radius, s.max_check_points,
               s.seed + 1000, false);
  {
    auto extra = quasi_random_checks(model.dimension, s.quasi_random_checks, s.escape_radius, s.seed + 2000);
    checks.insert(checks.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  }

  lp::SimplexResult sr;
  for (int round = 0; round <= s.round_limit; ++round) {
    sr = lp::maximize(c, model.equalities, model.inequalities, opt);
    if (sr.status == lp::Status::unbounded && !res.refined_after_unbounded) {
      res.refined_after_unbounded = true;
      fill_model(model, scaled_density(s, 2));
      --round;
      continue;
    }
    RoundLog log;
    log.round = round;
    log.rows = model.inequalities.size();
    log.iterations = sr.iterations;
    if (sr.status != lp::Status::optimal) {
      res.rounds.push_back(log);
      res.status = sr.status;
      res.message = std::string("simplex stopped: ") + lp::to_string(sr.status);
      return res;
    }
    log.objective = objective_of(model, sr.x);
    log.checked_points = checks.size();
    double worst = 0.0;
    const auto cuts = find_cuts(model, sr.x, checks, s.cut_tolerance, s.max_cuts_per_round, worst);
    log.cuts_added = cuts.size();
    log.max_violation = worst;
    res.rounds.push_back(log);
    if (cuts.empty()) break;
    if (round == s.round_limit) {
      res.message = "round limit reached with violations on the refined grid";
      break;
    }
    append_rows(model, cuts);
  }

  res.status = lp::Status::optimal;
  res.lp_coefficients = sr.x;
  res.coefficients = sr.x;
  res.objective_value = sr.objective + to_double(model.objective_constant);
  res.dual_objective = sr.dual_objective + to_double(model.objective_constant);
  res.recomputed_objective = objective_of(model, sr.x);
  res.verification = certify_candidate(sr.x, model.dimension, certify_grid);
  if (res.verification->passed()) {
    res.verified_objective = res.recomputed_objective;
    return res;
  }
  if (s.repair_with_reference) {
    const SymmetricQuartic ref = reference_polynomial(model.dimension);
    std::vector<double> r(ref.coefficients().size());
    for (size_t b = 0; b < r.size(); ++b) r[b] = to_double(ref.coefficients()[b]);
    for (double w : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.5}) {
      std::vector<double> blend(r.size());
      for (size_t b = 0; b < r.size(); ++b) blend[b] = (1 - w) * sr.x[b] + w * r[b];
      auto v = certify_candidate(blend, model.dimension, certify_grid);
      if (v.passed()) {
        res.coefficients = blend;
        res.blend_weight = w;
        res.verification = std::move(v);
        res.verified_objective = objective_of(model, blend);
        res.message = "LP candidate repaired by blending with the reference polynomial";
        return res;
      }
    }
  }
  if (res.message.empty()) res.message = "candidate failed certification";
  return res;
}

LPResult solve(LPModel& model, const lp::SimplexOptions& opt) {
  return solve(model, default_certify_grid(model.dimension), opt);
}

}  // namespace boxmin::lpsearch
