#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boxmin/rational.hpp"

namespace boxmin {

struct BoundsRecord {
  int dimension = 0;
  Rational nu_lower;
  Rational delta_lower;
  // Which dimension the delta lower bound came from (== dimension when it is
  // the nu bound itself).
  int delta_lower_source = 0;
  std::optional<Rational> delta_upper;
};

// Delta(M) >= (1 - M/N) + (M/N) Delta(N), for M < N.
struct Derivation {
  int from_dimension = 0;
  int to_dimension = 0;
  Rational value;
};

struct BoundsLedger {
  std::vector<BoundsRecord> records;
  std::vector<Derivation> derivations;
  int nc_lower = 0;
  std::optional<Rational> delta2_upper;
  std::optional<BigInt> nc_upper;

  const BoundsRecord& record(int dim) const;
  // "floor(2/(1-Delta(2)))" or the integer when an upper bound was supplied.
  std::string nc_upper_text() const;
};

// nu_lowers: dimension -> lower bound on nu. Every value must lie in [0, 1]
// and delta2_upper, when given, in [Delta(2) lower bound, 1); violations
// throw std::invalid_argument.
BoundsLedger bounds_ledger(const std::map<int, Rational>& nu_lowers,
                           const std::optional<Rational>& delta2_upper = std::nullopt);

// nu(1) = 1 and the four explicit constructions.
std::map<int, Rational> known_nu_lowers();

}  // namespace boxmin
