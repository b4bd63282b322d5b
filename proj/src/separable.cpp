#include "boxmin/separable.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "boxmin/specfun.hpp"

namespace boxmin {

namespace profile {

namespace {
constexpr double kWindow = 1e-4;

void check_exponent(int e) {
  if (e < 0 || e > 2) throw std::invalid_argument("profile: exponent must be 0, 1 or 2");
}
}  // namespace

double s_factor(double x) {
  const double ax = std::abs(x);
  if (ax < 0.5) {
    const double s = specfun::sinc(x, kWindow);
    const double d = x * x - 1.0;
    return s * s / (d * d);
  }
  // sin^2(pi x) = sin^2(pi u) with u = |x| - 1, and x^2 - 1 = u (|x| + 1).
  const double u = ax - 1.0;
  const double s = specfun::sinc(u, kWindow);
  const double d = x * (ax + 1.0);
  return s * s / (d * d);
}

double value(int e, double x) {
  check_exponent(e);
  const double s = s_factor(x);
  const double z = x * x;
  if (e == 0) return s;
  if (e == 1) return s * z;
  return s * z * z;
}

double transform(int e, double xi) {
  check_exponent(e);
  const double a = std::abs(xi);
  if (a >= 1.0) return 0.0;
  const double lambda = 1.0 - a;
  const double c = specfun::cos_pi(2.0 * a);
  const double s = specfun::sin_pi(2.0 * a) / (4.0 * std::numbers::pi);
  if (e == 0) return lambda * (1.0 + 0.5 * c) + 3.0 * s;
  if (e == 1) return 0.5 * c * lambda + s;
  return 0.5 * c * lambda - s;
}

Rational jet(int e, long long n, int order) {
  check_exponent(e);
  if (order != 0 && order != 1) throw std::invalid_argument("profile::jet: order must be 0 or 1");
  if (order == 0) {
    if (n == 0) return e == 0 ? Rational(1) : Rational(0);
    if (n == 1 || n == -1) return rat(1, 4);
    return 0;
  }
  if (n == 1 || n == -1) {
    static const Rational slope[3] = {rat(-3, 4), rat(-1, 4), rat(1, 4)};
    return n > 0 ? slope[e] : -slope[e];
  }
  return 0;
}

}  // namespace profile

SeparableSP::SeparableSP(int dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {
  if (dim < 1) throw std::invalid_argument("SeparableSP: dimension must be >= 1");
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != dim) {
      throw std::invalid_argument("SeparableSP: term exponent vector has wrong length");
    }
  }
}

SeparableSP SeparableSP::from_poly(const QuarticPoly& p) {
  std::vector<Term> terms;
  for (const auto& [e, c] : p.terms()) terms.push_back({e, to_double(c), c});
  return SeparableSP(p.dim(), std::move(terms));
}

bool SeparableSP::exact() const {
  for (const auto& t : terms_) {
    if (!t.exact) return false;
  }
  return true;
}

double SeparableSP::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("SeparableSP: point has wrong dimension");
  std::vector<double> g(static_cast<size_t>(3 * dim_));
  for (int i = 0; i < dim_; ++i) {
    const double s = profile::s_factor(x[static_cast<size_t>(i)]);
    const double z = x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    g[static_cast<size_t>(3 * i)] = s;
    g[static_cast<size_t>(3 * i + 1)] = s * z;
    g[static_cast<size_t>(3 * i + 2)] = s * z * z;
  }
  double sum = 0.0;
  for (const auto& t : terms_) {
    double m = t.coef;
    for (int i = 0; i < dim_; ++i) m *= g[static_cast<size_t>(3 * i + t.exponents[static_cast<size_t>(i)])];
    sum += m;
  }
  return sum;
}

double SeparableSP::transform(std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != dim_) throw std::invalid_argument("SeparableSP: frequency has wrong dimension");
  std::vector<double> g(static_cast<size_t>(3 * dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int e = 0; e < 3; ++e) g[static_cast<size_t>(3 * i + e)] = profile::transform(e, xi[static_cast<size_t>(i)]);
  }
  double sum = 0.0;
  for (const auto& t : terms_) {
    double m = t.coef;
    for (int i = 0; i < dim_; ++i) m *= g[static_cast<size_t>(3 * i + t.exponents[static_cast<size_t>(i)])];
    sum += m;
  }
  return sum;
}

std::optional<Rational> SeparableSP::exact_integral() const {
  // transforms at 0: 3/2, 1/2, 1/2
  static const Rational at_zero[3] = {rat(3, 2), rat(1, 2), rat(1, 2)};
  Rational sum = 0;
  for (const auto& t : terms_) {
    if (!t.exact) return std::nullopt;
    Rational m = *t.exact;
    for (int e : t.exponents) m *= at_zero[e];
    sum += m;
  }
  return sum;
}

double SeparableSP::integral() const {
  if (auto r = exact_integral()) return to_double(*r);
  const std::vector<double> zero(static_cast<size_t>(dim_), 0.0);
  return transform(zero);
}

SeparableSP SeparableSP::slice(std::span<const std::optional<double>> fixed) const {
  if (static_cast<int>(fixed.size()) != dim_) throw std::invalid_argument("slice: assignment has wrong dimension");
  int free = 0;
  for (const auto& f : fixed) free += f ? 0 : 1;
  if (free == 0) throw std::invalid_argument("slice: at least one coordinate must stay free");

  struct Acc {
    double coef = 0.0;
    std::optional<Rational> exact = Rational(0);
  };
  std::map<Exponents, Acc> merged;
  for (const auto& t : terms_) {
    double c = t.coef;
    std::optional<Rational> q = t.exact;
    Exponents rest;
    for (int i = 0; i < dim_; ++i) {
      const int e = t.exponents[static_cast<size_t>(i)];
      const auto& f = fixed[static_cast<size_t>(i)];
      if (!f) {
        rest.push_back(e);
        continue;
      }
      c *= profile::value(e, *f);
      if (q) {
        const double r = std::round(*f);
        if (r == *f && std::abs(r) < 1e15) {
          *q *= profile::jet(e, static_cast<long long>(r), 0);
        } else {
          q.reset();
        }
      }
    }
    Acc& a = merged[rest];
    a.coef += c;
    if (a.exact && q) *a.exact += *q;
    else a.exact.reset();
  }
  std::vector<Term> terms;
  for (auto& [e, a] : merged) {
    if (a.exact) {
      if (*a.exact == 0) continue;
      terms.push_back({e, to_double(*a.exact), a.exact});
    } else if (a.coef != 0.0) {
      terms.push_back({e, a.coef, std::nullopt});
    }
  }
  return SeparableSP(free, std::move(terms));
}

std::optional<Rational> SeparableSP::exact_jet(std::span<const int> n, unsigned mask) const {
  if (static_cast<int>(n.size()) != dim_) throw std::invalid_argument("exact_jet: point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    if (!t.exact) return std::nullopt;
    Rational m = *t.exact;
    for (int i = 0; i < dim_ && m != 0; ++i) {
      m *= profile::jet(t.exponents[static_cast<size_t>(i)], n[static_cast<size_t>(i)], (mask >> i) & 1u);
    }
    sum += m;
  }
  return sum;
}

double SeparableSP::jet(std::span<const int> n, unsigned mask) const {
  if (auto r = exact_jet(n, mask)) return to_double(*r);
  double sum = 0.0;
  for (const auto& t : terms_) {
    double m = t.coef;
    for (int i = 0; i < dim_; ++i) {
      m *= to_double(profile::jet(t.exponents[static_cast<size_t>(i)], n[static_cast<size_t>(i)], (mask >> i) & 1u));
    }
    sum += m;
  }
  return sum;
}

double SeparableSP::amplitude() const {
  double a = 0.0;
  for (const auto& t : terms_) a += std::abs(t.coef);
  return a;
}

}  // namespace boxmin
