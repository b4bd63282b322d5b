#pragma once

#include <complex>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxmin/analysis.hpp"

namespace boxmin::sieve {

// Sup-norm distance from x to the nearest point of Z^N.
double lattice_distance(std::span<const double> x);

// Points on R^N / Z^N (stored reduced to [0,1)^N), each farther than
// `separation` from the integer lattice.
class TorusPointSet {
 public:
  // Throws std::invalid_argument on ragged/empty input, non-finite entries,
  // separation outside (0, 1/2), or a point with lattice distance <= separation.
  TorusPointSet(int dim, std::vector<std::vector<double>> points, double separation);

  int dimension() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  double separation() const { return separation_; }
  const std::vector<std::vector<double>>& points() const { return points_; }
  // Seed used when the set was generated at random.
  std::optional<std::uint64_t> seed;

 private:
  int dim_;
  double separation_;
  std::vector<std::vector<double>> points_;
};

// sum_m exp(2 pi i n . xi_m); phases are reduced mod 1 before the exponential.
std::complex<double> exponential_sum(const TorusPointSet& points, std::span<const int> n);
std::complex<double> exponential_sum(std::span<const std::vector<double>> points, std::span<const int> n);

// Periodized, dilated minorant eps^N sum_{|n|_inf < 1/eps} F^(eps n) e(n . x).
// Coefficients use F's exact transform when it has one, numeric_fourier
// otherwise. Throws std::invalid_argument unless 0 < eps < 1/2.
class PsiEpsilon {
 public:
  PsiEpsilon(const BandlimitedFunction& F, double eps);
  double operator()(std::span<const double> x) const;
  double epsilon() const { return eps_; }
  // eps^N F^(0), the mean over the torus.
  double mean() const { return mean_; }
  std::size_t terms() const { return coef_.size(); }

 private:
  int dim_;
  double eps_;
  double mean_;
  std::vector<std::vector<int>> freq_;
  std::vector<double> coef_;
};

double psi_epsilon(std::span<const double> x, const BandlimitedFunction& F, double eps);

struct RatioEstimate {
  double ratio = 0.0;           // max |F^| / F^(0)
  double transform_at_origin = 0.0;
  std::vector<double> argmax;
  double grid_step = 0.01;
  bool exact_transform = false;  // closed-form transform used
};

// Grid search over Q_N with the given step, then a pattern search around the
// best node. Throws std::invalid_argument if F^(0) <= 0 or step is not in (0, 1].
RatioEstimate fourier_ratio(const BandlimitedFunction& F, double step = 0.01);

struct SieveReport {
  int dimension = 0;
  std::size_t M = 0;
  double epsilon = 0.0;
  int classical_range = 0;  // floor(N / eps)
  int improved_range = 0;   // floor(1 / eps)
  double classical_sum = 0.0;
  double improved_sum = 0.0;
  double classical_bound = 0.0;  // 3 * classical_sum
  double improved_bound = 0.0;   // ratio * improved_sum
  RatioEstimate fourier_ratio;
  std::optional<std::uint64_t> seed;

  bool holds() const {
    return static_cast<double>(M) <= classical_bound && static_cast<double>(M) <= improved_bound;
  }
};

// Throws std::invalid_argument on dimension mismatch, eps different from the
// point set's separation check failing, or F^(0) <= 0.
SieveReport sieve_bounds(const TorusPointSet& points, const BandlimitedFunction& F, double eps);
// Same, reusing a ratio computed earlier for F.
SieveReport sieve_bounds(const TorusPointSet& points, const RatioEstimate& ratio, double eps);

// M points drawn uniformly and rejected until farther than eps from Z^N.
TorusPointSet random_point_set(int dim, std::size_t M, double eps, std::uint64_t seed);

// One point per line, comma separated; blank lines and '#' comments skipped.
TorusPointSet read_points_csv(std::istream& in, double eps);
// [[x, y], ...] or {"points": [[x, y], ...]}.
TorusPointSet read_points_json(const std::string& text, double eps);

}  // namespace boxmin::sieve
