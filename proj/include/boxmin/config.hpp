#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boxmin/lowdim.hpp"
#include "boxmin/lpsearch.hpp"

namespace boxmin {

// Key/value configuration file:
//
//   # comment
//   threads = 4
//   [lp]
//   interior_points_per_axis = 41
//   exterior_shells = [1.0, 1.05, 2.0]
//   [verify]
//   seed = 3
//
// Keys inside a [section] are stored as "section.key". Values are numbers,
// true/false, "quoted strings" or [comma, separated, lists]; a bare word is
// taken as a string. Parsing errors throw std::invalid_argument with the line.
class Config {
 public:
  static Config parse(std::istream& in);
  static Config parse_string(const std::string& text);
  // Throws std::runtime_error if the file cannot be opened.
  static Config load(const std::string& path);

  bool has(const std::string& key) const;
  std::optional<std::string> text(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  long long integer(const std::string& key, long long fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) const;

  const std::map<std::string, std::string>& entries() const { return values_; }
  // Keys present in the file but never read.
  std::vector<std::string> unused() const;

 private:
  const std::string* raw(const std::string& key) const;
  std::map<std::string, std::string> values_;
  mutable std::set<std::string> read_;
};

// Overrides from the [lp] and [verify] sections on top of `base`; the result
// is validated.
lpsearch::SamplingSpec sampling_from(const Config& c, lpsearch::SamplingSpec base = {});
GridSpec grid_from(const Config& c, GridSpec base);

}  // namespace boxmin
