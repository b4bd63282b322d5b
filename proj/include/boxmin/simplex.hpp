#pragma once

#include <span>
#include <vector>

namespace boxmin::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(Status s);

// Rows a_i . x (relation) b_i, row-major.
struct RowBlock {
  int n = 0;
  std::vector<double> a;
  std::vector<double> b;

  explicit RowBlock(int width = 0) : n(width) {}
  std::size_t size() const { return b.size(); }
  void add(std::span<const double> row, double rhs);
  std::span<const double> row(std::size_t i) const {
    return {a.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  }
};

struct SimplexOptions {
  int max_iterations = 50'000;
  double tolerance = 1e-11;
  // consecutive degenerate pivots before switching from Dantzig to Bland pricing
  int degenerate_limit = 50;
};

struct SimplexResult {
  Status status = Status::iteration_limit;
  std::vector<double> x;
  double objective = 0.0;       // c . x
  double dual_objective = 0.0;  // e . y + b . w
  int iterations = 0;
  bool bland_used = false;
  // dual weight of each inequality row (nonzero only for active rows)
  std::vector<double> row_weights;
};

// maximize c . x subject to E x = e, A x <= b, x free.
//
// Solved through the dual, min e.y + b.w s.t. E^T y + A^T w = c, w >= 0 (y split
// into two nonnegative parts), which has only n = dim(x) equality rows: a
// two-phase revised simplex with artificials, a dense LU refactorization every
// pivot, Dantzig pricing and a permanent switch to Bland's rule after a run of
// degenerate pivots. The primal x is read off the simplex multipliers.
// Deterministic: no randomness, fixed tie-breaking by index.
SimplexResult maximize(std::span<const double> c, const RowBlock& eq, const RowBlock& ineq,
                       const SimplexOptions& opt = {});

}  // namespace boxmin::lp
