#include "boxmin/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace boxmin {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

// ------------------------------------------------------------ QuarticPoly

QuarticPoly QuarticPoly::constant(int dim, const Rational& c) {
  QuarticPoly p(dim);
  p.add_term(Exponents(static_cast<size_t>(dim), 0), c);
  return p;
}

QuarticPoly QuarticPoly::monomial(int dim, int axis, int e, const Rational& c) {
  if (axis < 0 || axis >= dim) throw std::out_of_range("QuarticPoly::monomial: axis out of range");
  if (e < 0 || e > 2) throw std::domain_error("QuarticPoly::monomial: exponent must be 0, 1 or 2");
  QuarticPoly p(dim);
  Exponents ex(static_cast<size_t>(dim), 0);
  ex[static_cast<size_t>(axis)] = e;
  p.add_term(ex, c);
  return p;
}

void QuarticPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != dim_) throw std::invalid_argument("QuarticPoly: exponent vector has wrong length");
  for (int v : e) {
    if (v < 0 || v > 2) throw std::domain_error("QuarticPoly: per-variable exponent must be 0, 1 or 2");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QuarticPoly& QuarticPoly::operator+=(const QuarticPoly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("QuarticPoly: dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QuarticPoly& QuarticPoly::operator-=(const QuarticPoly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("QuarticPoly: dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QuarticPoly& QuarticPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

QuarticPoly operator*(const QuarticPoly& a, const QuarticPoly& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("QuarticPoly: dimension mismatch");
  QuarticPoly out(a.dim_);
  Exponents e(static_cast<size_t>(a.dim_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > 2) throw std::domain_error("QuarticPoly: product exceeds degree 4 in a variable");
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

double QuarticPoly::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("QuarticPoly: point has wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = to_double(c);
    for (size_t i = 0; i < e.size(); ++i) {
      const double z = x[i] * x[i];
      if (e[i] == 1) m *= z;
      else if (e[i] == 2) m *= z * z;
    }
    sum += m;
  }
  return sum;
}

Rational QuarticPoly::exact(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("QuarticPoly: point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (size_t i = 0; i < e.size(); ++i) {
      const Rational z = x[i] * x[i];
      if (e[i] == 1) m *= z;
      else if (e[i] == 2) m *= z * z;
    }
    sum += m;
  }
  return sum;
}

QuarticPoly QuarticPoly::restrict_to_zero(int axis) const {
  if (axis < 0 || axis >= dim_) throw std::out_of_range("QuarticPoly::restrict_to_zero: axis out of range");
  if (dim_ == 1) throw std::invalid_argument("QuarticPoly::restrict_to_zero: cannot drop the only variable");
  QuarticPoly out(dim_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<size_t>(axis)] != 0) continue;
    Exponents r;
    for (int i = 0; i < dim_; ++i) {
      if (i != axis) r.push_back(e[static_cast<size_t>(i)]);
    }
    out.add_term(r, c);
  }
  return out;
}

QuarticPoly QuarticPoly::restrict_leading(int k) const {
  if (k < 1 || k > dim_) throw std::out_of_range("QuarticPoly::restrict_leading: k out of range");
  QuarticPoly p = *this;
  while (p.dim() > k) p = p.restrict_to_zero(p.dim() - 1);
  return p;
}

// -------------------------------------------------------- symmetric basis

std::vector<SymmetricIndex> symmetric_basis(int dim) {
  if (dim < 1) throw std::invalid_argument("symmetric_basis: dimension must be >= 1");
  std::vector<SymmetricIndex> basis;
  for (int twos = 0; twos <= dim; ++twos) {
    for (int ones = 0; ones + twos <= dim; ++ones) basis.push_back({ones, twos});
  }
  return basis;
}

MonomialTable::MonomialTable(std::span<const double> x) : n_(static_cast<int>(x.size())) {
  const size_t w = static_cast<size_t>(n_) + 1;
  t_.assign(w * w, 0.0);
  t_[0] = 1.0;
  // After processing m variables, t_[j*w + k] holds the sum over placements of
  // j ones and k twos among those m variables.
  int processed = 0;
  for (double xi : x) {
    const double z = xi * xi;
    const double z2 = z * z;
    ++processed;
    for (int total = processed; total >= 1; --total) {
      for (int k = std::min(total, processed); k >= 0; --k) {
        const int j = total - k;
        double add = 0.0;
        if (j >= 1) add += z * t_[static_cast<size_t>(j - 1) * w + static_cast<size_t>(k)];
        if (k >= 1) add += z2 * t_[static_cast<size_t>(j) * w + static_cast<size_t>(k - 1)];
        t_[static_cast<size_t>(j) * w + static_cast<size_t>(k)] += add;
      }
    }
  }
}

double MonomialTable::operator()(int ones, int twos) const {
  if (ones < 0 || twos < 0 || ones + twos > n_) return 0.0;
  return t_[static_cast<size_t>(ones) * (static_cast<size_t>(n_) + 1) + static_cast<size_t>(twos)];
}

namespace {

// Canonical representative exponent vector of a basis element: twos first.
Exponents representative(int dim, SymmetricIndex idx) {
  Exponents e(static_cast<size_t>(dim), 0);
  for (int i = 0; i < idx.twos; ++i) e[static_cast<size_t>(i)] = 2;
  for (int i = 0; i < idx.ones; ++i) e[static_cast<size_t>(idx.twos + i)] = 1;
  return e;
}

SymmetricIndex index_of_exponents(const Exponents& e) {
  SymmetricIndex idx;
  for (int v : e) {
    if (v == 1) ++idx.ones;
    else if (v == 2) ++idx.twos;
  }
  return idx;
}

}  // namespace

SymmetricQuartic::SymmetricQuartic(int dim)
    : dim_(dim), basis_(symmetric_basis(dim)), coeffs_(basis_.size()), fcoeffs_(basis_.size(), 0.0) {}

SymmetricQuartic::SymmetricQuartic(int dim, std::vector<Rational> coefficients)
    : dim_(dim), basis_(symmetric_basis(dim)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != basis_.size()) {
    throw std::invalid_argument("SymmetricQuartic: expected " + std::to_string(basis_.size()) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
  fcoeffs_.resize(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) fcoeffs_[i] = to_double(coeffs_[i]);
}

size_t SymmetricQuartic::index_of(SymmetricIndex idx) const {
  if (idx.ones < 0 || idx.twos < 0 || idx.ones + idx.twos > dim_) {
    throw std::out_of_range("SymmetricQuartic: basis index out of range");
  }
  // Elements with fewer twos come first; block of t twos has N - t + 1 entries.
  size_t pos = 0;
  for (int t = 0; t < idx.twos; ++t) pos += static_cast<size_t>(dim_ - t + 1);
  return pos + static_cast<size_t>(idx.ones);
}

const Rational& SymmetricQuartic::coefficient(SymmetricIndex idx) const { return coeffs_[index_of(idx)]; }

void SymmetricQuartic::set_coefficient(SymmetricIndex idx, const Rational& c) {
  const size_t i = index_of(idx);
  coeffs_[i] = c;
  fcoeffs_[i] = to_double(c);
}

SymmetricQuartic SymmetricQuartic::from_poly(const QuarticPoly& p) {
  SymmetricQuartic s(p.dim());
  std::vector<bool> seen(s.basis_.size(), false);
  for (const auto& [e, c] : p.terms()) {
    const SymmetricIndex idx = index_of_exponents(e);
    const size_t i = s.index_of(idx);
    if (!seen[i]) {
      s.set_coefficient(idx, c);
      seen[i] = true;
    } else if (s.coeffs_[i] != c) {
      throw std::invalid_argument("SymmetricQuartic::from_poly: polynomial is not permutation invariant");
    }
  }
  // Every placement of a present multiset must carry the same coefficient.
  if (s.to_poly() != p) {
    throw std::invalid_argument("SymmetricQuartic::from_poly: polynomial is not permutation invariant");
  }
  return s;
}

QuarticPoly SymmetricQuartic::to_poly() const {
  QuarticPoly p(dim_);
  for (size_t b = 0; b < basis_.size(); ++b) {
    if (coeffs_[b] == 0) continue;
    Exponents e = representative(dim_, basis_[b]);
    std::sort(e.begin(), e.end());
    do {
      p.add_term(e, coeffs_[b]);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return p;
}

double SymmetricQuartic::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("SymmetricQuartic: point has " + std::to_string(x.size()) +
                                " coordinates, polynomial has " + std::to_string(dim_));
  }
  const MonomialTable m(x);
  double sum = 0.0;
  for (size_t b = 0; b < basis_.size(); ++b) {
    if (fcoeffs_[b] != 0.0) sum += fcoeffs_[b] * m(basis_[b].ones, basis_[b].twos);
  }
  return sum;
}

Rational SymmetricQuartic::exact(std::span<const Rational> x) const { return to_poly().exact(x); }

Rational SymmetricQuartic::at_unit_point(int k) const {
  if (k < 0 || k > dim_) throw std::out_of_range("at_unit_point: k out of range");
  // At u_k every squared coordinate is 0 or 1, so m_b(u_k) counts placements
  // of the multiset's nonzero entries inside the first k slots.
  Rational sum = 0;
  for (size_t b = 0; b < basis_.size(); ++b) {
    const int ones = basis_[b].ones, twos = basis_[b].twos;
    if (ones + twos > k) continue;
    // multinomial k! / (ones! twos! (k-ones-twos)!)
    BigInt count = 1;
    for (int i = 0; i < twos; ++i) count = count * (k - i) / (i + 1);
    for (int i = 0; i < ones; ++i) count = count * (k - twos - i) / (i + 1);
    sum += coeffs_[b] * Rational(count);
  }
  return sum;
}

// ------------------------------------------------------------------ sigma

double sigma(int k, std::span<const double> x, bool quartic) {
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) {
    throw std::out_of_range("sigma: order " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  std::vector<double> e(static_cast<size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (double xi : x) {
    double z = xi * xi;
    if (quartic) z *= z;
    for (int j = k; j >= 1; --j) e[static_cast<size_t>(j)] += z * e[static_cast<size_t>(j - 1)];
  }
  return e[static_cast<size_t>(k)];
}

QuarticPoly sigma_poly(int dim, int k, bool quartic) {
  if (k < 1 || k > dim) {
    throw std::out_of_range("sigma_poly: order " + std::to_string(k) + " outside [1, " + std::to_string(dim) + "]");
  }
  QuarticPoly p(dim);
  Exponents e(static_cast<size_t>(dim), 0);
  for (int i = 0; i < k; ++i) e[static_cast<size_t>(dim - 1 - i)] = quartic ? 2 : 1;
  do {
    p.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

std::string to_string(const QuarticPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) os << "*x" << (i + 1) << "^" << 2 * e[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(const UniPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << to_string(mag);
    if (k > 0) os << (unit ? "" : "*") << "t";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace boxmin
