#pragma once

#include <string>

#include <json.hpp>

#include "boxmin/analysis.hpp"
#include "boxmin/bounds.hpp"
#include "boxmin/box.hpp"
#include "boxmin/lowdim.hpp"
#include "boxmin/lpsearch.hpp"
#include "boxmin/sieve.hpp"

namespace boxmin::report {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

// {"exact": "p/q", "decimal": 0.984375}
json rational_json(const Rational& r);
// Reads the "exact" field; throws std::invalid_argument if it is missing.
Rational rational_from(const json& j);

json to_json(const VerificationReport& r);
VerificationReport verification_from(const json& j);

json to_json(const analysis::PoissonReport& r);
analysis::PoissonReport poisson_from(const json& j);

json to_json(const BoundsLedger& L);
BoundsLedger bounds_from(const json& j);

json to_json(const sieve::SieveReport& r);
sieve::SieveReport sieve_from(const json& j);

json to_json(const lpsearch::LPResult& r, const lpsearch::LPModel& model);
json to_json(const box::ThresholdReport& r);
json to_json(const lowdim::IdentityReport& r);
json to_json(const lowdim::LatticeReport& r);
json to_json(const analysis::FourierEstimate& e);
json to_json(const analysis::FundamentalReport& r);

// {"schema_version": 1, "kind": kind, "result": body}; throws
// std::invalid_argument on a different version or kind when reading.
json envelope(const std::string& kind, json body);
const json& open_envelope(const json& j, const std::string& kind);

}  // namespace boxmin::report
