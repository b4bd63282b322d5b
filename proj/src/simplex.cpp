#include "boxmin/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace boxmin::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

void RowBlock::add(std::span<const double> row, double rhs) {
  if (static_cast<int>(row.size()) != n) throw std::invalid_argument("RowBlock::add: row has wrong width");
  a.insert(a.end(), row.begin(), row.end());
  b.push_back(rhs);
}

namespace {

// Dense LU with partial pivoting of an n x n matrix (row-major).
class Lu {
 public:
  explicit Lu(std::vector<double> m, size_t n) : n_(n), lu_(std::move(m)), piv_(n) {
    for (size_t i = 0; i < n; ++i) piv_[i] = i;
    for (size_t k = 0; k < n; ++k) {
      size_t p = k;
      double best = std::abs(at(k, k));
      for (size_t i = k + 1; i < n; ++i) {
        if (std::abs(at(i, k)) > best) {
          best = std::abs(at(i, k));
          p = i;
        }
      }
      if (best < 1e-300) throw std::runtime_error("simplex: singular basis matrix");
      if (p != k) {
        for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
        std::swap(piv_[k], piv_[p]);
      }
      for (size_t i = k + 1; i < n; ++i) {
        const double f = at(i, k) / at(k, k);
        at(i, k) = f;
        for (size_t j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
      }
    }
  }

  // B x = r
  std::vector<double> solve(const std::vector<double>& r) const {
    std::vector<double> y(n_);
    for (size_t i = 0; i < n_; ++i) {
      double s = r[piv_[i]];
      for (size_t j = 0; j < i; ++j) s -= at(i, j) * y[j];
      y[i] = s;
    }
    for (size_t i = n_; i-- > 0;) {
      double s = y[i];
      for (size_t j = i + 1; j < n_; ++j) s -= at(i, j) * y[j];
      y[i] = s / at(i, i);
    }
    return y;
  }

  // B^T x = r
  std::vector<double> solve_transpose(const std::vector<double>& r) const {
    std::vector<double> z(n_);
    for (size_t i = 0; i < n_; ++i) {
      double s = r[i];
      for (size_t j = 0; j < i; ++j) s -= at(j, i) * z[j];
      z[i] = s / at(i, i);
    }
    for (size_t i = n_; i-- > 0;) {
      double s = z[i];
      for (size_t j = i + 1; j < n_; ++j) s -= at(j, i) * z[j];
      z[i] = s;
    }
    std::vector<double> x(n_);
    for (size_t i = 0; i < n_; ++i) x[piv_[i]] = z[i];
    return x;
  }

 private:
  double& at(size_t i, size_t j) { return lu_[i * n_ + j]; }
  double at(size_t i, size_t j) const { return lu_[i * n_ + j]; }
  size_t n_;
  std::vector<double> lu_;
  std::vector<size_t> piv_;
};

class DualSimplex {
 public:
  DualSimplex(std::span<const double> c, const RowBlock& eq, const RowBlock& ineq, const SimplexOptions& opt)
      : n_(c.size()), eq_(eq), ineq_(ineq), opt_(opt) {
    real_ = 2 * eq.size() + ineq.size();
    sign_.resize(n_);
    rhs_.resize(n_);
    for (size_t r = 0; r < n_; ++r) {
      sign_[r] = c[r] < 0.0 ? -1.0 : 1.0;
      rhs_[r] = sign_[r] * c[r];
    }
    cost_.resize(real_);
    for (size_t j = 0; j < real_; ++j) cost_[j] = raw_cost(j);
    basis_.resize(n_);
    for (size_t r = 0; r < n_; ++r) basis_[r] = real_ + r;
    in_basis_.assign(real_ + n_, false);
    for (size_t r = 0; r < n_; ++r) in_basis_[real_ + r] = true;
  }

  SimplexResult run() {
    SimplexResult res;
    // phase 1: minimize the sum of artificials
    Status s = iterate(true, res);
    if (s == Status::iteration_limit) return finish(res, s);
    const auto xb = current_lu().solve(rhs_);
    double infeas = 0.0;
    for (size_t r = 0; r < n_; ++r) {
      if (is_artificial(basis_[r])) infeas += std::abs(xb[r]);
    }
    double scale = 1.0;
    for (double v : rhs_) scale = std::max(scale, v);
    if (infeas > 1e-9 * scale) {
      // the dual has no feasible point: the primal is unbounded (or infeasible)
      return finish(res, Status::unbounded);
    }
    drive_out_artificials();
    s = iterate(false, res);
    if (s == Status::unbounded) return finish(res, Status::infeasible);
    return finish(res, s);
  }

 private:
  bool is_artificial(size_t j) const { return j >= real_; }

  double raw_cost(size_t j) const {
    const size_t ne = eq_.size();
    if (j < ne) return eq_.b[j];
    if (j < 2 * ne) return -eq_.b[j - ne];
    return ineq_.b[j - 2 * ne];
  }

  // column j of the (unflipped) dual constraint matrix
  void column(size_t j, std::vector<double>& out) const {
    out.assign(n_, 0.0);
    const size_t ne = eq_.size();
    if (j >= real_) {
      out[j - real_] = sign_[j - real_];  // flipped back, so D * column = e_r
      return;
    }
    std::span<const double> row;
    double s = 1.0;
    if (j < ne) {
      row = eq_.row(j);
    } else if (j < 2 * ne) {
      row = eq_.row(j - ne);
      s = -1.0;
    } else {
      row = ineq_.row(j - 2 * ne);
    }
    for (size_t r = 0; r < n_; ++r) out[r] = s * row[r];
  }

  // D * column(j)
  void flipped_column(size_t j, std::vector<double>& out) const {
    column(j, out);
    for (size_t r = 0; r < n_; ++r) out[r] *= sign_[r];
  }

  double phase_cost(size_t j, bool phase1) const {
    if (phase1) return is_artificial(j) ? 1.0 : 0.0;
    return is_artificial(j) ? 0.0 : cost_[j];
  }

  Lu current_lu() const {
    std::vector<double> m(n_ * n_);
    std::vector<double> col;
    for (size_t k = 0; k < n_; ++k) {
      flipped_column(basis_[k], col);
      for (size_t r = 0; r < n_; ++r) m[r * n_ + k] = col[r];
    }
    return Lu(std::move(m), n_);
  }

  // reduced cost of a real column given multipliers y (flipped system)
  double reduced_cost(size_t j, const std::vector<double>& dy, bool phase1) const {
    const size_t ne = eq_.size();
    std::span<const double> row;
    double s = 1.0;
    if (j < ne) {
      row = eq_.row(j);
    } else if (j < 2 * ne) {
      row = eq_.row(j - ne);
      s = -1.0;
    } else {
      row = ineq_.row(j - 2 * ne);
    }
    double dot = 0.0;
    for (size_t r = 0; r < n_; ++r) dot += dy[r] * row[r];
    return phase_cost(j, phase1) - s * dot;
  }

  Status iterate(bool phase1, SimplexResult& res) {
    int degenerate_run = 0;
    std::vector<double> col;
    while (true) {
      if (res.iterations >= opt_.max_iterations) return Status::iteration_limit;
      const Lu lu = current_lu();
      const auto xb = lu.solve(rhs_);
      std::vector<double> cb(n_);
      for (size_t r = 0; r < n_; ++r) cb[r] = phase_cost(basis_[r], phase1);
      const auto y = lu.solve_transpose(cb);
      // multipliers mapped back to the unflipped rows
      std::vector<double> dy(n_);
      for (size_t r = 0; r < n_; ++r) dy[r] = sign_[r] * y[r];

      size_t enter = real_;
      double best = -opt_.tolerance;
      for (size_t j = 0; j < real_; ++j) {
        if (in_basis_[j]) continue;
        const double d = reduced_cost(j, dy, phase1);
        if (bland_) {
          if (d < -opt_.tolerance) {
            enter = j;
            break;
          }
        } else if (d < best) {
          best = d;
          enter = j;
        }
      }
      if (enter == real_) return Status::optimal;

      flipped_column(enter, col);
      const auto u = lu.solve(col);
      size_t leave = n_;
      double ratio = std::numeric_limits<double>::infinity();
      constexpr double kPivot = 1e-12;
      for (size_t r = 0; r < n_; ++r) {
        double q;
        if (!phase1 && is_artificial(basis_[r])) {
          if (std::abs(u[r]) <= kPivot) continue;
          q = 0.0;
        } else {
          if (u[r] <= kPivot) continue;
          q = std::max(xb[r], 0.0) / u[r];
        }
        if (q < ratio || (q == ratio && leave < n_ && basis_[r] < basis_[leave])) {
          ratio = q;
          leave = r;
        }
      }
      if (leave == n_) return Status::unbounded;

      in_basis_[basis_[leave]] = false;
      basis_[leave] = enter;
      in_basis_[enter] = true;
      ++res.iterations;
      if (ratio <= 0.0) {
        if (++degenerate_run >= opt_.degenerate_limit) bland_ = true;
      } else {
        degenerate_run = 0;
      }
    }
  }

  void drive_out_artificials() {
    std::vector<double> col;
    for (size_t r = 0; r < n_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      const Lu lu = current_lu();
      std::vector<double> e(n_, 0.0);
      e[r] = 1.0;
      const auto rho = lu.solve_transpose(e);  // row r of B^-1
      for (size_t j = 0; j < real_; ++j) {
        if (in_basis_[j]) continue;
        flipped_column(j, col);
        double a = 0.0;
        for (size_t k = 0; k < n_; ++k) a += rho[k] * col[k];
        if (std::abs(a) > 1e-9) {
          in_basis_[basis_[r]] = false;
          basis_[r] = j;
          in_basis_[j] = true;
          break;
        }
      }
    }
  }

  SimplexResult& finish(SimplexResult& res, Status s) {
    res.status = s;
    res.bland_used = bland_;
    if (s != Status::optimal) return res;
    const Lu lu = current_lu();
    const auto xb = lu.solve(rhs_);
    std::vector<double> cb(n_);
    for (size_t r = 0; r < n_; ++r) cb[r] = phase_cost(basis_[r], false);
    const auto y = lu.solve_transpose(cb);
    res.x.resize(n_);
    for (size_t r = 0; r < n_; ++r) res.x[r] = sign_[r] * y[r];
    res.row_weights.assign(ineq_.size(), 0.0);
    res.dual_objective = 0.0;
    const size_t ne = eq_.size();
    for (size_t r = 0; r < n_; ++r) {
      const size_t j = basis_[r];
      if (is_artificial(j)) continue;
      res.dual_objective += cost_[j] * xb[r];
      if (j >= 2 * ne) res.row_weights[j - 2 * ne] = xb[r];
    }
    return res;
  }

  size_t n_;
  const RowBlock& eq_;
  const RowBlock& ineq_;
  SimplexOptions opt_;
  size_t real_ = 0;
  std::vector<double> sign_, rhs_, cost_;
  std::vector<size_t> basis_;
  std::vector<bool> in_basis_;
  bool bland_ = false;
};

}  // namespace

SimplexResult maximize(std::span<const double> c, const RowBlock& eq, const RowBlock& ineq, const SimplexOptions& opt) {
  const int n = static_cast<int>(c.size());
  if (n < 1) throw std::invalid_argument("maximize: empty objective");
  if ((eq.size() > 0 && eq.n != n) || (ineq.size() > 0 && ineq.n != n)) {
    throw std::invalid_argument("maximize: row width does not match the objective");
  }
  DualSimplex solver(c, eq, ineq, opt);
  SimplexResult res = solver.run();
  if (res.status == Status::optimal) {
    res.objective = 0.0;
    for (int i = 0; i < n; ++i) res.objective += c[static_cast<size_t>(i)] * res.x[static_cast<size_t>(i)];
  }
  return res;
}

}  // namespace boxmin::lp
