#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxmin/polynomial.hpp"
#include "boxmin/separable.hpp"

namespace boxmin {

// Raised when an exact formula is applied to an input outside its domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// F = S * P for one of the four explicit low-dimensional polynomials.
struct PaperMinorant {
  int dimension = 0;
  SymmetricQuartic polynomial{1};
  Rational exact_integral;
  std::string name;
};

struct GridSpec {
  // Tensor grid over [-1,1]^N; 0 disables it.
  int points_per_axis = 201;
  // Extra quasi-random interior points (useful for N >= 4 where tensor grids
  // get large).
  std::uint64_t interior_samples = 0;
  std::uint64_t exterior_samples = 100'000;
  double exterior_radius = 6.0;
  std::uint64_t seed = 1;
  double tolerance = 1e-12;
  // Per-axis nodes on [0, exterior_radius] for the escape-regime checks.
  int escape_points_per_axis = 25;
  std::size_t max_recorded_violations = 20;

  // Throws std::invalid_argument on nonsensical values.
  void validate() const;
};

struct Violation {
  std::vector<double> point;
  double value = 0.0;
  bool interior = false;
};

// Leading coefficient of P when `coordinates_at_infinity` coordinates grow
// without bound, sampled over the remaining ones. Must stay <= 0.
struct EscapeCheck {
  int coordinates_at_infinity = 0;
  std::uint64_t samples = 0;
  double max_leading = 0.0;
  std::vector<double> argmax;
  bool passed = true;
};

struct VerificationReport {
  std::string construction;
  int dimension = 0;
  double tolerance = 0.0;
  std::uint64_t interior_samples = 0;
  std::uint64_t exterior_samples = 0;
  double interior_max = 0.0;
  std::vector<double> interior_argmax;
  double exterior_max = 0.0;
  std::vector<double> exterior_argmax;
  std::uint64_t interior_violations = 0;
  std::uint64_t exterior_violations = 0;
  std::vector<Violation> violations;
  std::vector<EscapeCheck> escape;
  // P(0) == 1 and P(u_1) == 0 exactly.
  bool interpolation_conditions = false;
  // Integral from the corner formula and the finite lattice sum of F over
  // sup-norm <= 2 (they agree when the interpolation conditions hold).
  std::optional<double> corner_integral;
  std::optional<double> lattice_sum;
  std::string note = "numeric sampling check, not a proof";

  bool passed() const;
};

namespace lowdim {

// prod_i s_factor(x_i) >= 0.
double eval_S(std::span<const double> x);

// The explicit polynomial for N in {2,3,4,5}:
//   prod (1 - x_i^2) - (3/4) sigma_{N,4} [N >= 4] - (1/16) quartic sigma_{N,2}
// Throws std::invalid_argument for other N.
SymmetricQuartic explicit_polynomial(int dim);
PaperMinorant explicit_minorant(int dim);

// The one-dimensional polynomial 1 - x^2, for which S * P is the extremal
// minorant of [-1, 1].
SymmetricQuartic unit_polynomial();

double eval_F(const SymmetricQuartic& p, std::span<const double> x);
double eval_F(const PaperMinorant& m, std::span<const double> x);

// Integral of S * P for P with P(0) = 1 and P(u_1) = 0:
//   1 + sum_{k=2}^N C(N,k) 2^-k P(u_k).
// Throws precondition_error naming the failed condition.
Rational corner_integral(const SymmetricQuartic& p);

VerificationReport verify_admissibility(const SymmetricQuartic& p, const GridSpec& grid,
                                        const std::string& name = "S*P");
VerificationReport verify_admissibility(const PaperMinorant& m, const GridSpec& grid);

// Serial reference for the interior/exterior sweeps (no escape checks).
VerificationReport verify_admissibility_serial(const SymmetricQuartic& p, const GridSpec& grid,
                                               const std::string& name = "S*P");

struct IdentityReport {
  UniPoly target;       // 1 - 2t + t^2 - t^4/16
  UniPoly first_form;   // (1-t)^2 - t^4/16
  UniPoly second_form;  // (t-2)^2 (4 - 4t - t^2) / 16 ... expanded
  bool first_matches = false;
  bool second_matches = false;
  // sigma_{4,2} - sigma_{4,3} <= x1^2 x2^2 + x3^2 x4^2 on |x_i| >= 1
  std::uint64_t inequality_samples = 0;
  double inequality_max_excess = 0.0;  // max of lhs - rhs
  std::vector<double> inequality_argmax;
  bool inequality_holds = false;
  double boundary_excess = 0.0;  // at (1,1,1,1): exactly 0

  bool passed() const { return first_matches && second_matches && inequality_holds; }
};

IdentityReport check_identities(std::uint64_t samples = 200'000, std::uint64_t seed = 7);

struct CornerValue {
  std::vector<int> point;
  Rational value;
};

struct LatticeReport {
  int dimension = 0;
  int radius = 0;
  double origin_value = 0.0;
  std::uint64_t checked_points = 0;
  double max_noncorner_abs = 0.0;
  std::vector<int> max_noncorner_point;
  std::vector<CornerValue> corners;  // exact S*P at each corner
  Rational corner_sum;
  Rational poisson_total;  // F(0) + sum over corners
  bool matches_integral = false;
  double tolerance = 1e-12;

  bool passed() const;
};

// Requires radius >= 2.
LatticeReport lattice_interpolation_check(const SymmetricQuartic& p, int radius);
LatticeReport lattice_interpolation_check(const PaperMinorant& m, int radius);

// k entries equal to 1, the rest 0.
std::vector<double> unit_point(int dim, int k);

}  // namespace lowdim
}  // namespace boxmin
