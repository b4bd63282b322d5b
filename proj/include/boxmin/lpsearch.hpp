#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxmin/lowdim.hpp"
#include "boxmin/polynomial.hpp"
#include "boxmin/simplex.hpp"

namespace boxmin::lpsearch {

struct SamplingSpec {
  // Nodes per axis on [0,1]; only points with 1 >= x_1 >= ... >= x_N >= 0 are
  // used (the constraints are symmetric).
  int interior_points_per_axis = 41;
  std::uint64_t max_interior_rows = 200'000;
  // Sup-norm shells outside the box. 1.0 itself is included: P <= 0 on the
  // boundary faces is part of the exterior condition.
  std::vector<double> exterior_shells = {1.0, 1.01, 1.05, 1.25, 1.5, 2.0, 3.0, 6.0};
  int exterior_points_per_axis = 21;
  // Escape regimes: grid for the coordinates that stay finite.
  double escape_radius = 6.0;
  int escape_points_per_axis = 13;
  std::uint64_t seed = 1;
  // Cutting-plane rounds after the first solve.
  int round_limit = 8;
  // Density multiplier of the re-verification grid.
  int refine_factor = 4;
  // Cap on re-verification points per family (quasi-random beyond it).
  std::uint64_t max_check_points = 2'000'000;
  std::uint64_t max_cuts_per_round = 4000;
  // Rows count as violated above this (rows are scaled to unit max-norm).
  double cut_tolerance = 1e-11;
  // Quasi-random interior and exterior points added to every check round
  // (they fill the gaps between exterior shells).
  std::uint64_t quasi_random_checks = 200'000;
  // When the final LP candidate fails certification, blend it with a known
  // admissible polynomial, (1-w) P_lp + w P_ref, at the smallest tried weight
  // that certifies. The weight is reported.
  bool repair_with_reference = true;

  void validate() const;
};

// tangent: P(1, y, 0, ..., 0) <= 0 for y near 0 forces the y^2 coefficient
// of that restriction to be <= 0 (sampling alone only bounds it by the
// smallest sampled y).
enum class RowKind { interior, exterior, escape, tangent };
const char* to_string(RowKind k);

struct RowOrigin {
  RowKind kind = RowKind::interior;
  // for escape rows: how many coordinates go to infinity
  int escape_coordinates = 0;
  // the sample (for escape rows, the finite coordinates)
  std::vector<double> point;
};

struct LPModel {
  int dimension = 0;
  std::vector<SymmetricIndex> basis;
  // integral = objective_constant + objective . p
  std::vector<Rational> objective;
  Rational objective_constant = 1;
  lp::RowBlock equalities;
  lp::RowBlock inequalities;
  std::vector<RowOrigin> origins;  // one per inequality row
  SamplingSpec sampling;
};

struct RoundLog {
  int round = 0;
  double objective = 0.0;
  std::uint64_t rows = 0;
  std::uint64_t checked_points = 0;
  std::uint64_t cuts_added = 0;
  double max_violation = 0.0;
  int iterations = 0;
};

struct LPResult {
  lp::Status status = lp::Status::iteration_limit;
  std::vector<double> coefficients;     // reported candidate, in basis order
  std::vector<double> lp_coefficients;  // the last LP solution
  double objective_value = 0.0;         // from the solver
  double recomputed_objective = 0.0;    // constant + objective . lp_coefficients
  // Weight of the reference polynomial in `coefficients` (0: pure LP).
  double blend_weight = 0.0;
  double dual_objective = 0.0;
  std::optional<VerificationReport> verification;
  std::optional<double> verified_objective;  // set when verification passes
  std::vector<RoundLog> rounds;
  bool refined_after_unbounded = false;
  std::string message;
};

// Throws std::invalid_argument unless 1 <= N <= 5.
LPModel build_model(int dim, const SamplingSpec& sampling = {});

// Basis evaluation vector m_b(x) for every basis element.
std::vector<double> basis_row(const std::vector<SymmetricIndex>& basis, std::span<const double> x);
// Leading-coefficient row when the first k coordinates go to infinity, with
// the remaining N-k coordinates at y.
std::vector<double> escape_row(const std::vector<SymmetricIndex>& basis, int k, std::span<const double> y);

// The model's objective for given coefficients.
double objective_of(const LPModel& model, std::span<const double> coeffs);
// Largest violation of the model's own rows (scaled), equalities included.
double max_row_violation(const LPModel& model, std::span<const double> coeffs);

// Default certification grid for dimension N (>= 10^6 interior points for N >= 2).
GridSpec default_certify_grid(int dim);

LPResult solve(LPModel& model, const lp::SimplexOptions& opt = {});
LPResult solve(LPModel& model, const GridSpec& certify_grid, const lp::SimplexOptions& opt = {});

// Independent check of a candidate on a grid the LP never saw.
VerificationReport certify_candidate(std::span<const double> coeffs, int dim, const GridSpec& grid);
VerificationReport certify_candidate(std::span<const double> coeffs, int dim);

// Known admissible polynomial used for repair: 1 - x^2 for N = 1, the
// explicit constructions for N = 2..5.
SymmetricQuartic reference_polynomial(int dim);

// Coefficients as a SymmetricQuartic (nearest doubles converted exactly).
SymmetricQuartic to_polynomial(std::span<const double> coeffs, int dim);

}  // namespace boxmin::lpsearch
