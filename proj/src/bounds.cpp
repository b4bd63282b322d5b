#include "boxmin/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxmin {

const BoundsRecord& BoundsLedger::record(int dim) const {
  for (const auto& r : records) {
    if (r.dimension == dim) return r;
  }
  throw std::out_of_range("BoundsLedger: no record for dimension " + std::to_string(dim));
}

std::string BoundsLedger::nc_upper_text() const {
  if (nc_upper) return nc_upper->str();
  return "floor(2/(1-Delta(2)))";
}

BoundsLedger bounds_ledger(const std::map<int, Rational>& nu_lowers, const std::optional<Rational>& delta2_upper) {
  for (const auto& [n, v] : nu_lowers) {
    if (n < 1) throw std::invalid_argument("bounds_ledger: dimension must be >= 1");
    if (v < 0 || v > 1) {
      throw std::invalid_argument("bounds_ledger: nu lower bound for N=" + std::to_string(n) + " is " + to_string(v) +
                                  ", outside [0, 1]");
    }
  }
  BoundsLedger L;
  int top = 2;
  for (const auto& [n, v] : nu_lowers) top = std::max(top, n);

  // nu <= Delta, and the descent inequality from every higher dimension with a
  // positive bound (only those satisfy N <= N_c).
  for (int m = 1; m <= top; ++m) {
    BoundsRecord r;
    r.dimension = m;
    auto it = nu_lowers.find(m);
    r.nu_lower = it == nu_lowers.end() ? Rational(0) : it->second;
    r.delta_lower = r.nu_lower;
    r.delta_lower_source = m;
    L.records.push_back(r);
  }
  for (int m = 1; m <= top; ++m) {
    BoundsRecord& r = L.records[static_cast<size_t>(m - 1)];
    for (const auto& [n, v] : nu_lowers) {
      if (n <= m || v <= 0) continue;
      const Rational value = 1 - Rational(m, n) + Rational(m, n) * v;
      L.derivations.push_back({n, m, value});
      if (value > r.delta_lower) {
        r.delta_lower = value;
        r.delta_lower_source = n;
      }
    }
  }

  for (const auto& [n, v] : nu_lowers) {
    if (v > 0) L.nc_lower = std::max(L.nc_lower, n);
  }

  if (delta2_upper) {
    const Rational& u = *delta2_upper;
    if (u >= 1 || u < 0) throw std::invalid_argument("bounds_ledger: Delta(2) upper bound must lie in [0, 1)");
    if (top >= 2 && u < L.records[1].delta_lower) {
      throw std::invalid_argument("bounds_ledger: Delta(2) upper bound " + to_string(u) +
                                  " is below the derived lower bound " + to_string(L.records[1].delta_lower));
    }
    L.delta2_upper = u;
    L.nc_upper = floor_of(2 / (1 - u));
    // (1 - Delta(N))/N is nondecreasing while Delta(N) > 0, so
    // Delta(N) <= 1 - N (1 - u) / 2, and Delta(N) = 0 once that is <= 0.
    for (auto& r : L.records) {
      if (r.dimension < 2) continue;
      Rational bound = 1 - Rational(r.dimension) * (1 - u) / 2;
      if (bound < 0) bound = 0;
      if (r.delta_lower > bound) {
        throw std::invalid_argument("bounds_ledger: inconsistent inputs in dimension " + std::to_string(r.dimension));
      }
      r.delta_upper = bound;
    }
  }
  return L;
}

std::map<int, Rational> known_nu_lowers() {
  return {{1, Rational(1)}, {2, rat(63, 64)}, {3, rat(119, 128)}, {4, rat(95, 128)}, {5, rat(31, 256)}};
}

}  // namespace boxmin
