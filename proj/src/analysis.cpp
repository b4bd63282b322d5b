#include "boxmin/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boxmin/kernels.hpp"

namespace boxmin {

// ------------------------------------------------------------ DecayEnvelope

double DecayEnvelope::axis(double s) const {
  const double a = std::abs(s);
  if (a <= core_radius) return 1.0;
  return std::pow(1.0 + a - core_radius, -exponent);
}

namespace {

// integral of phi over [s0, inf), s0 >= 0
double phi_integral_from(const DecayEnvelope& e, double s0) {
  const double p = e.exponent;
  if (s0 >= e.core_radius) return std::pow(1.0 + s0 - e.core_radius, 1.0 - p) / (p - 1.0);
  return (e.core_radius - s0) + 1.0 / (p - 1.0);
}

}  // namespace

double DecayEnvelope::axis_tail(double h, double t, long long m) const {
  // n > m: arguments h(n + t) >= h(m + 1 + t); n < -m: |h(n + t)| >= h(m + 1 - t).
  // phi is nonincreasing in |s|, so each one-sided sum is at most its first
  // term plus the integral from there.
  double total = 0.0;
  for (double start : {h * (static_cast<double>(m) + 1.0 + t), h * (static_cast<double>(m) + 1.0 - t)}) {
    const double s0 = std::max(start, 0.0);
    total += axis(s0) + phi_integral_from(*this, s0) / h;
  }
  return total;
}

double DecayEnvelope::axis_mass(double h, double t, long long m) const {
  double total = 0.0;
  for (long long n = -m; n <= m; ++n) total += axis(h * (static_cast<double>(n) + t));
  return total;
}

// ------------------------------------------------------ BandlimitedFunction

std::optional<double> BandlimitedFunction::integral() const {
  if (known_integral) return to_double(*known_integral);
  if (closed_form_integral) return closed_form_integral;
  return std::nullopt;
}

void BandlimitedFunction::validate() const {
  if (dimension < 1) throw std::invalid_argument("BandlimitedFunction: dimension must be >= 1");
  if (support.dim() != dimension) throw std::invalid_argument("BandlimitedFunction: support box dimension mismatch");
  if (!(envelope.exponent > 1.0)) throw std::invalid_argument("BandlimitedFunction: decay exponent must exceed 1");
  if (!(envelope.amplitude >= 0.0) || !(envelope.core_radius >= 0.0)) {
    throw std::invalid_argument("BandlimitedFunction: envelope amplitude and core radius must be >= 0");
  }
  if (!evaluate) throw std::invalid_argument("BandlimitedFunction: missing evaluator");
}

namespace functions {

BandlimitedFunction from_polynomial(const SymmetricQuartic& p, const std::string& name) {
  auto sep = std::make_shared<const SeparableSP>(SeparableSP::from_poly(p.to_poly()));
  BandlimitedFunction f;
  f.name = name;
  f.dimension = p.dim();
  f.evaluate = [p](std::span<const double> x) { return lowdim::eval_F(p, x); };
  f.support = Box::cube(p.dim(), 1.0);
  try {
    f.known_integral = lowdim::corner_integral(p);
  } catch (const precondition_error&) {
    f.known_integral = sep->exact_integral();
  }
  f.envelope = {sep->amplitude(), 2.0, 2.0};
  f.integer_support_radius = 1;
  f.transform = [sep](std::span<const double> xi) { return sep->transform(xi); };
  f.separable = sep;
  return f;
}

BandlimitedFunction explicit_construction(int dim) {
  return from_polynomial(lowdim::explicit_polynomial(dim), "F" + std::to_string(dim));
}

BandlimitedFunction extremal_1d() {
  BandlimitedFunction f = from_polynomial(lowdim::unit_polynomial(), "extremal_1d");
  f.evaluate = [](std::span<const double> x) {
    if (x.size() != 1) throw std::invalid_argument("extremal_1d: expects one coordinate");
    return selberg1d::extremal_minorant(x[0]);
  };
  f.integer_support_radius = 0;
  return f;
}

BandlimitedFunction fejer() {
  BandlimitedFunction f;
  f.name = "fejer";
  f.dimension = 1;
  f.evaluate = [](std::span<const double> x) {
    if (x.size() != 1) throw std::invalid_argument("fejer: expects one coordinate");
    return specfun::fejer(x[0]);
  };
  f.support = Box::cube(1, 1.0);
  f.known_integral = Rational(1);
  // K(x) <= 1/(pi x)^2 <= |x|^-2
  f.envelope = {1.0, 1.0, 2.0};
  f.integer_support_radius = 0;
  f.transform = [](std::span<const double> xi) { return std::max(0.0, 1.0 - std::abs(xi[0])); };
  return f;
}

namespace {

// Per-axis amplitude for kernels built from H and K at band limit delta, with
// core radius max(|a|,|b|) + 1/delta: K(delta s) <= (pi delta s)^-2 decays
// like phi with constant 1/(pi^2 min(1,delta)^2).
double kernel_amplitude(double delta, double inside, double multiple) {
  const double m = std::min(1.0, delta);
  return std::max(inside, multiple / (std::numbers::pi * std::numbers::pi * m * m));
}

double box_core(const Box& B, double delta) {
  double c = 0.0;
  for (const auto& I : B.intervals()) c = std::max({c, std::abs(I.a), std::abs(I.b)});
  return c + 1.0 / delta;
}

}  // namespace

BandlimitedFunction selberg_interval(const SelbergPair& pair, const specfun::EvalConfig& cfg) {
  BandlimitedFunction f;
  f.name = pair.side == Side::majorant ? "selberg_majorant" : "selberg_minorant";
  f.dimension = 1;
  f.evaluate = [pair, cfg](std::span<const double> x) {
    if (x.size() != 1) throw std::invalid_argument("selberg_interval: expects one coordinate");
    return selberg1d::evaluate(x[0], pair, cfg);
  };
  f.support = Box::cube(1, pair.delta);
  f.closed_form_integral = selberg1d::integral(pair);
  // |c|, |C| <= 3 inside the core; outside, |C - 1_I| and |c - 1_I| <= 2E.
  f.envelope = {kernel_amplitude(pair.delta, 3.0, 2.0),
                box_core(Box({pair.interval}), pair.delta), 2.0};
  return f;
}

BandlimitedFunction selberg_box(const Box& B, double delta, const specfun::EvalConfig& cfg) {
  if (!(delta > 0.0)) throw std::invalid_argument("selberg_box: delta must be > 0");
  BandlimitedFunction f;
  f.name = "selberg_box";
  f.dimension = B.dim();
  f.evaluate = [B, delta, cfg](std::span<const double> x) { return box::selberg_minorant(x, B, delta, cfg); };
  f.support = Box::cube(B.dim(), delta);
  f.closed_form_integral = box::selberg_integral(B.scaled(delta)) / std::pow(delta, B.dim());
  const double a = kernel_amplitude(delta, 4.0, 3.0);
  f.envelope = {(2.0 * B.dim() - 1.0) * std::pow(a, B.dim()), box_core(B, delta), 2.0};
  return f;
}

BandlimitedFunction montgomery_box(const Box& B, double delta, const specfun::EvalConfig& cfg) {
  if (!(delta > 0.0)) throw std::invalid_argument("montgomery_box: delta must be > 0");
  BandlimitedFunction f;
  f.name = "montgomery_box";
  f.dimension = B.dim();
  f.evaluate = [B, delta, cfg](std::span<const double> x) { return box::montgomery_minorant(x, B, delta, cfg); };
  f.support = Box::cube(B.dim(), delta);
  f.closed_form_integral = box::montgomery_integral(B.scaled(delta)) / std::pow(delta, B.dim());
  const double a = kernel_amplitude(delta, 4.0, 3.0);
  f.envelope = {3.0 * std::pow(a, B.dim()), box_core(B, delta), 2.0};
  return f;
}

}  // namespace functions

namespace analysis {

namespace {

double half_width(const Interval& I) { return std::max(std::abs(I.a), std::abs(I.b)); }

void check_point(const BandlimitedFunction& F, std::span<const double> t, const char* what) {
  if (static_cast<int>(t.size()) != F.dimension) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(F.dimension) +
                                " coordinates, got " + std::to_string(t.size()));
  }
}

// Sum over |n|_inf > m of A prod_i phi(h_i (n_i + t_i)), times prod h_i.
double lattice_tail(const DecayEnvelope& e, std::span<const double> h, std::span<const double> t, long long m) {
  const size_t d = h.size();
  std::vector<double> tail(d), total(d);
  for (size_t i = 0; i < d; ++i) {
    tail[i] = e.axis_tail(h[i], t[i], m);
    total[i] = e.axis_mass(h[i], t[i], std::min<long long>(m, 100'000)) + e.axis_tail(h[i], t[i], std::min<long long>(m, 100'000));
  }
  double bound = 0.0;
  for (size_t i = 0; i < d; ++i) {
    double term = tail[i];
    for (size_t j = 0; j < d; ++j) {
      if (j != i) term *= total[j];
    }
    bound += term;
  }
  double vol = 1.0;
  for (double x : h) vol *= x;
  return e.amplitude * vol * bound;
}

template <bool Parallel>
PoissonReport poisson_impl(const BandlimitedFunction& F, std::span<const double> t, int R) {
  F.validate();
  check_point(F, t, "poisson_sum");
  if (R < 1) throw std::invalid_argument("poisson_sum: R must be >= 1");
  const int n = F.dimension;
  PoissonReport rep;
  rep.radius = R;
  rep.step.resize(static_cast<size_t>(n));
  double vol = 1.0;
  for (int i = 0; i < n; ++i) {
    rep.step[static_cast<size_t>(i)] = 1.0 / half_width(F.support[i]);
    vol *= rep.step[static_cast<size_t>(i)];
  }
  const std::vector<double> h = rep.step;
  const std::vector<double> shift(t.begin(), t.end());
  auto term = [&F, &h, &shift](std::span<const int> k) {
    std::vector<double> x(k.size());
    for (size_t i = 0; i < k.size(); ++i) x[i] = h[i] * (k[i] + shift[i]);
    return F.evaluate(x);
  };
  double s;
  if constexpr (Parallel) s = kernels::lattice_sum<double>(n, R, term);
  else s = kernels::lattice_sum_serial<double>(n, R, term);
  rep.sum = vol * s;

  bool exact_tail = false;
  if (F.integer_support_radius) {
    bool unit = true, integral_shift = true;
    double tmax = 0.0;
    for (int i = 0; i < n; ++i) {
      unit = unit && h[static_cast<size_t>(i)] == 1.0;
      integral_shift = integral_shift && std::round(t[static_cast<size_t>(i)]) == t[static_cast<size_t>(i)];
      tmax = std::max(tmax, std::abs(t[static_cast<size_t>(i)]));
    }
    exact_tail = unit && integral_shift && R >= *F.integer_support_radius + tmax;
  }
  rep.tail_bound = exact_tail ? 0.0 : lattice_tail(F.envelope, h, t, R);
  rep.integral = F.integral();
  if (rep.integral) rep.defect = std::abs(rep.sum - *rep.integral);
  return rep;
}

}  // namespace

bool PoissonReport::within_bound() const {
  if (!defect) return true;
  // rounding slack on top of the analytic tail
  return *defect <= tail_bound + 1e-9 * (1.0 + std::abs(*integral));
}

PoissonReport poisson_sum(const BandlimitedFunction& F, std::span<const double> t, int R) {
  return poisson_impl<true>(F, t, R);
}

PoissonReport poisson_sum_serial(const BandlimitedFunction& F, std::span<const double> t, int R) {
  return poisson_impl<false>(F, t, R);
}

FundamentalReport fundamental_inequality(const BandlimitedFunction& F, int R) {
  F.validate();
  FundamentalReport r;
  const std::vector<double> origin(static_cast<size_t>(F.dimension), 0.0);
  r.value_at_origin = F.evaluate(origin);
  if (F.known_integral) {
    r.exact_transform_at_origin = F.known_integral;
    r.transform_at_origin = to_double(*F.known_integral);
  } else if (F.closed_form_integral) {
    r.transform_at_origin = *F.closed_form_integral;
  } else if (F.transform) {
    r.transform_at_origin = F.transform(origin);
  } else {
    const std::vector<double> half(static_cast<size_t>(F.dimension), 0.5);
    r.transform_at_origin = poisson_sum(F, half, R).sum;
  }
  r.slack = r.value_at_origin - r.transform_at_origin;
  r.holds = r.transform_at_origin <= r.value_at_origin + r.tolerance;

  double worst = 0.0;
  std::vector<double> x(static_cast<size_t>(F.dimension));
  for (int rho = 1; rho <= R; ++rho) {
    kernels::for_each_in_shell(F.dimension, rho, [&](std::span<const int> n) {
      for (size_t i = 0; i < x.size(); ++i) x[i] = n[i];
      worst = std::max(worst, std::abs(F.evaluate(x)));
    });
  }
  r.equality_case = worst <= 1e-12;
  return r;
}

// ------------------------------------------------------------------ jets

bool JetKeyLess::operator()(const JetKey& a, const JetKey& b) const {
  auto sup = [](const std::vector<int>& v) {
    int m = 0;
    for (int x : v) m = std::max(m, std::abs(x));
    return m;
  };
  const int sa = sup(a.point), sb = sup(b.point);
  if (sa != sb) return sa < sb;
  if (a.point != b.point) return a.point < b.point;
  return a.mask < b.mask;
}

void LatticeJet::set(std::vector<int> n, unsigned mask, double value) {
  if (static_cast<int>(n.size()) != dimension) throw std::invalid_argument("LatticeJet: point has wrong dimension");
  if (mask >= (1u << dimension)) throw std::invalid_argument("LatticeJet: derivative mask out of range");
  int sup = 0;
  for (int v : n) sup = std::max(sup, std::abs(v));
  truncation_radius = std::max(truncation_radius, sup);
  entries[JetKey{std::move(n), mask}] = value;
}

double interpolate(const LatticeJet& jet, std::span<const double> x) {
  if (static_cast<int>(x.size()) != jet.dimension) throw std::invalid_argument("interpolate: point has wrong dimension");
  std::vector<int> nearest(x.size());
  bool on_lattice = true;
  for (size_t i = 0; i < x.size(); ++i) {
    const double r = std::round(x[i]);
    nearest[i] = static_cast<int>(r);
    on_lattice = on_lattice && std::abs(x[i] - r) <= 1e-8;
  }
  if (on_lattice) {
    auto it = jet.entries.find(JetKey{nearest, 0u});
    return it == jet.entries.end() ? 0.0 : it->second;
  }
  // (sin(pi x)/pi)^2 / (x - n)^2 = K(x - n) and (sin(pi x)/pi)^2 / (x - n)
  // = (x - n) K(x - n): both bounded, so no special cases off the lattice.
  double sum = 0.0;
  for (const auto& [key, value] : jet.entries) {
    double w = value;
    for (size_t i = 0; i < x.size() && w != 0.0; ++i) {
      const double d = x[i] - key.point[i];
      const double k = specfun::fejer(d);
      w *= ((key.mask >> i) & 1u) ? d * k : k;
    }
    sum += w;
  }
  return sum;
}

LatticeJet exact_jet(const SeparableSP& f) {
  LatticeJet jet;
  jet.dimension = f.dim();
  const int n = f.dim();
  for (int rho = 0; rho <= 1; ++rho) {
    kernels::for_each_in_shell(n, rho, [&](std::span<const int> pt) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const double v = f.jet(pt, mask);
        if (v != 0.0) jet.set(std::vector<int>(pt.begin(), pt.end()), mask, v);
      }
    });
  }
  jet.truncation_radius = 1;
  return jet;
}

LatticeJet numeric_jet(const BandlimitedFunction& F, int R, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("numeric_jet: step must be > 0");
  LatticeJet jet;
  jet.dimension = F.dimension;
  const int n = F.dimension;
  std::vector<double> x(static_cast<size_t>(n));
  for (int rho = 0; rho <= R; ++rho) {
    kernels::for_each_in_shell(n, rho, [&](std::span<const int> pt) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int order = std::popcount(mask);
        double acc = 0.0;
        // sum over sign patterns of the differentiated coordinates
        for (unsigned s = 0; s < (1u << order); ++s) {
          int bit = 0;
          double sign = 1.0;
          for (int i = 0; i < n; ++i) {
            x[static_cast<size_t>(i)] = pt[static_cast<size_t>(i)];
            if ((mask >> i) & 1u) {
              const bool plus = (s >> bit++) & 1u;
              x[static_cast<size_t>(i)] += plus ? h : -h;
              if (!plus) sign = -sign;
            }
          }
          acc += sign * F.evaluate(x);
        }
        jet.set(std::vector<int>(pt.begin(), pt.end()), mask, acc / std::pow(2.0 * h, order));
      }
    });
  }
  jet.truncation_radius = R;
  return jet;
}

// --------------------------------------------------------------- Fourier

namespace {

void check_step(const BandlimitedFunction& F, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("numeric_fourier: step h must be > 0");
  double w = 0.0;
  for (const auto& I : F.support.intervals()) w = std::max(w, half_width(I));
  if (1.0 / h < 2.5 * w) {
    throw std::invalid_argument("numeric_fourier: 1/h = " + std::to_string(1.0 / h) +
                                " is below 2.5 times the support half-width " + std::to_string(w));
  }
}

long long sample_radius(double h, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("numeric_fourier: R must be > 0");
  return static_cast<long long>(std::floor(R / h + 1e-9));
}

// e(-phase), phase reduced mod 1 first
std::complex<double> twiddle(double phase) {
  phase -= std::round(phase);
  return {specfun::cos_pi(2.0 * phase), -specfun::sin_pi(2.0 * phase)};
}

double fourier_truncation(const BandlimitedFunction& F, double h, long long m) {
  const std::vector<double> step(static_cast<size_t>(F.dimension), h);
  const std::vector<double> zero(static_cast<size_t>(F.dimension), 0.0);
  return lattice_tail(F.envelope, step, zero, m);
}

}  // namespace

FourierEstimate numeric_fourier(const BandlimitedFunction& F, std::span<const double> xi, double h, double R) {
  F.validate();
  check_point(F, xi, "numeric_fourier");
  check_step(F, h);
  const long long m = sample_radius(h, R);
  const std::vector<double> freq(xi.begin(), xi.end());
  auto term = [&F, &freq, h](std::span<const int> k) {
    std::vector<double> x(k.size());
    double phase = 0.0;
    for (size_t i = 0; i < k.size(); ++i) {
      x[i] = h * k[i];
      // reduce each product separately to keep the phase small
      double p = freq[i] * x[i];
      p -= std::round(p);
      phase += p;
    }
    return F.evaluate(x) * twiddle(phase);
  };
  const std::complex<double> s = kernels::lattice_sum<std::complex<double>>(F.dimension, static_cast<int>(m), term);
  const double vol = std::pow(h, F.dimension);
  FourierEstimate e;
  e.value = vol * s.real();
  e.imaginary = vol * s.imag();
  e.truncation_bound = fourier_truncation(F, h, m);
  return e;
}

FourierSampler::FourierSampler(const BandlimitedFunction& F, double h, double R) : dim_(F.dimension), h_(h) {
  F.validate();
  check_step(F, h);
  m_ = sample_radius(h, R);
  const auto side = static_cast<std::uint64_t>(2 * m_ + 1);
  std::uint64_t total = 1;
  for (int i = 0; i < dim_; ++i) {
    total *= side;
    if (total > 200'000'000ULL) throw std::runtime_error("FourierSampler: sample grid too large");
  }
  samples_.resize(static_cast<size_t>(total));
  const int dim = dim_;
  const long long m = m_;
  auto body = [&](std::uint64_t first, std::uint64_t last, int&) {
    std::vector<double> x(static_cast<size_t>(dim));
    for (std::uint64_t i = first; i < last; ++i) {
      std::uint64_t idx = i;
      for (int a = dim - 1; a >= 0; --a) {
        x[static_cast<size_t>(a)] = h * (static_cast<double>(idx % side) - static_cast<double>(m));
        idx /= side;
      }
      samples_[static_cast<size_t>(i)] = F.evaluate(x);
    }
  };
  kernels::sweep(total, 0, body, [](int&, int&) {}, 1 << 14);
  truncation_ = fourier_truncation(F, h, m_);
}

FourierEstimate FourierSampler::operator()(std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != dim_) throw std::invalid_argument("FourierSampler: frequency has wrong dimension");
  const auto side = static_cast<size_t>(2 * m_ + 1);
  // contract the last axis first
  std::vector<std::complex<double>> cur;
  size_t len = samples_.size();
  for (int a = dim_ - 1; a >= 0; --a) {
    std::vector<std::complex<double>> tw(side);
    for (size_t k = 0; k < side; ++k) {
      double p = xi[static_cast<size_t>(a)] * h_ * (static_cast<double>(k) - static_cast<double>(m_));
      tw[k] = twiddle(p);
    }
    const size_t outer = len / side;
    std::vector<std::complex<double>> next(outer);
    for (size_t o = 0; o < outer; ++o) {
      std::complex<double> acc = 0.0;
      if (a == dim_ - 1) {
        const double* row = samples_.data() + o * side;
        for (size_t k = 0; k < side; ++k) acc += row[k] * tw[k];
      } else {
        const std::complex<double>* row = cur.data() + o * side;
        for (size_t k = 0; k < side; ++k) acc += row[k] * tw[k];
      }
      next[o] = acc;
    }
    cur = std::move(next);
    len = outer;
  }
  const double vol = std::pow(h_, dim_);
  FourierEstimate e;
  e.value = vol * cur[0].real();
  e.imaginary = vol * cur[0].imag();
  e.truncation_bound = truncation_;
  return e;
}

// ----------------------------------------------------------------- slice

SliceResult slice(const BandlimitedFunction& F, std::span<const std::optional<double>> fixed) {
  F.validate();
  if (static_cast<int>(fixed.size()) != F.dimension) {
    throw std::invalid_argument("slice: assignment must list all " + std::to_string(F.dimension) + " coordinates");
  }
  std::vector<Interval> free_support;
  bool all_zero = true;
  double fixed_decay = 1.0;
  for (int i = 0; i < F.dimension; ++i) {
    const auto& f = fixed[static_cast<size_t>(i)];
    if (f) {
      all_zero = all_zero && *f == 0.0;
      fixed_decay *= F.envelope.axis(*f);
    } else {
      free_support.push_back(F.support[i]);
    }
  }
  if (free_support.empty()) throw std::invalid_argument("slice: at least one coordinate must stay free");

  SliceResult r{};
  BandlimitedFunction& g = r.function;
  g.dimension = static_cast<int>(free_support.size());
  g.support = Box(free_support);
  g.name = F.name + "|slice";
  if (F.separable) {
    auto sep = std::make_shared<const SeparableSP>(F.separable->slice(fixed));
    g.evaluate = [sep](std::span<const double> x) { return (*sep)(x); };
    g.transform = [sep](std::span<const double> xi) { return sep->transform(xi); };
    g.known_integral = sep->exact_integral();
    if (!g.known_integral) g.closed_form_integral = sep->integral();
    g.envelope = {sep->amplitude(), F.envelope.core_radius, F.envelope.exponent};
    g.integer_support_radius = 1;
    g.separable = sep;
  } else {
    std::vector<std::optional<double>> assign(fixed.begin(), fixed.end());
    Evaluator parent = F.evaluate;
    g.evaluate = [parent, assign](std::span<const double> y) {
      std::vector<double> x(assign.size());
      size_t k = 0;
      for (size_t i = 0; i < assign.size(); ++i) x[i] = assign[i] ? *assign[i] : y[k++];
      if (k != y.size()) throw std::invalid_argument("slice: point has wrong dimension");
      return parent(x);
    };
    g.envelope = {F.envelope.amplitude * fixed_decay, F.envelope.core_radius, F.envelope.exponent};
  }
  r.parent_integral = F.integral();
  r.slice_integral = g.integral();
  if (all_zero && r.parent_integral && r.slice_integral) {
    if (F.known_integral && g.known_integral) r.monotone = *F.known_integral <= *g.known_integral;
    else r.monotone = *r.parent_integral <= *r.slice_integral + 1e-12;
  }
  return r;
}

}  // namespace analysis
}  // namespace boxmin
