#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxmin/box.hpp"
#include "boxmin/lowdim.hpp"
#include "boxmin/rational.hpp"
#include "boxmin/separable.hpp"

namespace boxmin {

// |F(x)| <= amplitude * prod_i phi(x_i), phi(s) = 1 for |s| <= core_radius and
// (1 + |s| - core_radius)^-exponent beyond. Drives truncation bounds.
struct DecayEnvelope {
  double amplitude = 1.0;
  double core_radius = 1.0;
  double exponent = 2.0;

  double axis(double s) const;
  // sum_{|n| > m} phi(h (n + t)) over integers n, bounded by an integral.
  double axis_tail(double h, double t, long long m) const;
  // sum_{|n| <= m} phi(h (n + t)), bounded above.
  double axis_mass(double h, double t, long long m) const;
};

using Evaluator = std::function<double(std::span<const double>)>;

struct BandlimitedFunction {
  std::string name;
  int dimension = 1;
  Evaluator evaluate;
  Box support = Box::cube(1, 1.0);
  std::optional<Rational> known_integral;
  // Integral known in closed form but not rational (e.g. 1/delta corrections).
  std::optional<double> closed_form_integral;
  DecayEnvelope envelope;
  // F vanishes at every integer point with sup-norm above this radius.
  std::optional<int> integer_support_radius;
  // Exact Fourier transform when available (real: all our functions are even).
  Evaluator transform;
  // Separable S*P structure, used for exact slices and jets.
  std::shared_ptr<const SeparableSP> separable;

  double decay_exponent() const { return envelope.exponent; }
  double operator()(std::span<const double> x) const { return evaluate(x); }
  std::optional<double> integral() const;
  // Throws std::invalid_argument if the invariants fail.
  void validate() const;
};

namespace functions {

BandlimitedFunction from_polynomial(const SymmetricQuartic& p, const std::string& name);
BandlimitedFunction explicit_construction(int dim);
BandlimitedFunction selberg_interval(const SelbergPair& pair, const specfun::EvalConfig& cfg = {});
BandlimitedFunction extremal_1d();
BandlimitedFunction fejer();
BandlimitedFunction selberg_box(const Box& B, double delta, const specfun::EvalConfig& cfg = {});
BandlimitedFunction montgomery_box(const Box& B, double delta, const specfun::EvalConfig& cfg = {});

}  // namespace functions

namespace analysis {

struct PoissonReport {
  double sum = 0.0;
  double tail_bound = 0.0;
  std::optional<double> integral;
  std::optional<double> defect;  // |sum - integral|
  std::vector<double> step;      // lattice spacing per axis
  int radius = 0;
  bool within_bound() const;
};

// h^N sum_{|n|_inf <= R} F(h (n + t)) with h_i = 1 / (support half-width), which
// equals the integral of F for band-limited F. Throws std::invalid_argument
// on dimension mismatch or R < 1.
PoissonReport poisson_sum(const BandlimitedFunction& F, std::span<const double> t, int R);
PoissonReport poisson_sum_serial(const BandlimitedFunction& F, std::span<const double> t, int R);

struct FundamentalReport {
  double value_at_origin = 0.0;
  double transform_at_origin = 0.0;
  std::optional<Rational> exact_transform_at_origin;
  double slack = 0.0;
  bool holds = false;
  // F vanishes at all nonzero integers inside the radius: equality case.
  bool equality_case = false;
  double tolerance = 1e-9;
};

FundamentalReport fundamental_inequality(const BandlimitedFunction& F, int R);

// (n, j) -> d_j F(n), j as a bit mask over coordinates.
struct JetKey {
  std::vector<int> point;
  unsigned mask = 0;
};

// Order: sup-norm of the point, then lexicographic, then mask.
struct JetKeyLess {
  bool operator()(const JetKey& a, const JetKey& b) const;
};

struct LatticeJet {
  int dimension = 1;
  int truncation_radius = 0;
  std::map<JetKey, double, JetKeyLess> entries;

  void set(std::vector<int> n, unsigned mask, double value);
};

// prod (sin(pi x_i)/pi)^2 sum_{n,j} d_jF(n) / (x - n)^(2 - j), summed in jet
// order. Points within 1e-8 of a lattice point return the stored value.
double interpolate(const LatticeJet& jet, std::span<const double> x);

// Exact jet of an S*P function on {-1,0,1}^N (everything else vanishes).
LatticeJet exact_jet(const SeparableSP& f);
// Central finite differences (step h) of an arbitrary function at every lattice
// point with sup-norm <= R and every mask.
LatticeJet numeric_jet(const BandlimitedFunction& F, int R, double h = 1e-5);

struct FourierEstimate {
  double value = 0.0;
  double imaginary = 0.0;
  double truncation_bound = 0.0;
  double aliasing = 0.0;
};

// h^N sum_{|h n|_inf <= R} F(h n) e(-xi . h n). Requires 1/h >= 2.5 * (max
// support half-width); throws std::invalid_argument otherwise.
FourierEstimate numeric_fourier(const BandlimitedFunction& F, std::span<const double> xi, double h = 0.25,
                                double R = 200.0);

// Caches the samples F(h n) once and evaluates the sampled transform at many
// frequencies by contracting one axis at a time.
class FourierSampler {
 public:
  FourierSampler(const BandlimitedFunction& F, double h, double R);
  FourierEstimate operator()(std::span<const double> xi) const;
  int dimension() const { return dim_; }
  long long points_per_axis() const { return 2 * m_ + 1; }

 private:
  int dim_;
  double h_;
  long long m_;
  double truncation_;
  std::vector<double> samples_;
};

struct SliceResult {
  BandlimitedFunction function;
  std::optional<double> parent_integral;
  std::optional<double> slice_integral;
  // parent integral <= slice integral, when both are known
  std::optional<bool> monotone;
};

// Fixes the coordinates with a value; the free ones keep their order.
SliceResult slice(const BandlimitedFunction& F, std::span<const std::optional<double>> fixed);

}  // namespace analysis
}  // namespace boxmin
