#include "boxmin/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boxmin {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// drops a trailing comment that is not inside quotes
std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

double to_number(const std::string& key, const std::string& v) {
  size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || trim(v.substr(used)) != "") {
    throw std::invalid_argument("config: " + key + " = " + v + " is not a number");
  }
  return d;
}

}  // namespace

Config Config::parse(std::istream& in) {
  Config c;
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw std::invalid_argument(where + "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw std::invalid_argument(where + "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(where + "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(where + "empty key");
    if (value.empty()) throw std::invalid_argument(where + "empty value for " + key);
    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') throw std::invalid_argument(where + "unterminated string");
      value = value.substr(1, value.size() - 2);
    } else if (value.front() == '[' && value.back() != ']') {
      throw std::invalid_argument(where + "unterminated list");
    }
    if (!section.empty()) key = section + "." + key;
    if (c.values_.count(key)) throw std::invalid_argument(where + "duplicate key " + key);
    c.values_[key] = value;
  }
  return c;
}

Config Config::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  return parse(in);
}

const std::string* Config::raw(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return nullptr;
  read_.insert(key);
  return &it->second;
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::optional<std::string> Config::text(const std::string& key) const {
  const std::string* v = raw(key);
  if (!v) return std::nullopt;
  return *v;
}

double Config::number(const std::string& key, double fallback) const {
  const std::string* v = raw(key);
  return v ? to_number(key, *v) : fallback;
}

long long Config::integer(const std::string& key, long long fallback) const {
  const std::string* v = raw(key);
  if (!v) return fallback;
  const double d = to_number(key, *v);
  if (d != static_cast<double>(static_cast<long long>(d))) {
    throw std::invalid_argument("config: " + key + " must be an integer");
  }
  return static_cast<long long>(d);
}

bool Config::flag(const std::string& key, bool fallback) const {
  const std::string* v = raw(key);
  if (!v) return fallback;
  if (*v == "true") return true;
  if (*v == "false") return false;
  throw std::invalid_argument("config: " + key + " must be true or false");
}

std::vector<double> Config::numbers(const std::string& key, std::vector<double> fallback) const {
  const std::string* v = raw(key);
  if (!v) return fallback;
  std::string body = *v;
  if (body.front() == '[') body = body.substr(1, body.size() - 2);
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_number(key, item));
  }
  return out;
}

std::vector<std::string> Config::unused() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) {
    if (!read_.count(k)) out.push_back(k);
  }
  return out;
}

lpsearch::SamplingSpec sampling_from(const Config& c, lpsearch::SamplingSpec s) {
  s.interior_points_per_axis = static_cast<int>(c.integer("lp.interior_points_per_axis", s.interior_points_per_axis));
  s.max_interior_rows = static_cast<std::uint64_t>(c.integer("lp.max_interior_rows", static_cast<long long>(s.max_interior_rows)));
  s.exterior_shells = c.numbers("lp.exterior_shells", s.exterior_shells);
  s.exterior_points_per_axis = static_cast<int>(c.integer("lp.exterior_points_per_axis", s.exterior_points_per_axis));
  s.escape_radius = c.number("lp.escape_radius", s.escape_radius);
  s.escape_points_per_axis = static_cast<int>(c.integer("lp.escape_points_per_axis", s.escape_points_per_axis));
  s.seed = static_cast<std::uint64_t>(c.integer("lp.seed", static_cast<long long>(s.seed)));
  s.round_limit = static_cast<int>(c.integer("lp.round_limit", s.round_limit));
  s.refine_factor = static_cast<int>(c.integer("lp.refine_factor", s.refine_factor));
  s.max_check_points = static_cast<std::uint64_t>(c.integer("lp.max_check_points", static_cast<long long>(s.max_check_points)));
  s.max_cuts_per_round = static_cast<std::uint64_t>(c.integer("lp.max_cuts_per_round", static_cast<long long>(s.max_cuts_per_round)));
  s.cut_tolerance = c.number("lp.cut_tolerance", s.cut_tolerance);
  s.quasi_random_checks = static_cast<std::uint64_t>(c.integer("lp.quasi_random_checks", static_cast<long long>(s.quasi_random_checks)));
  s.repair_with_reference = c.flag("lp.repair_with_reference", s.repair_with_reference);
  s.validate();
  return s;
}

GridSpec grid_from(const Config& c, GridSpec g) {
  g.points_per_axis = static_cast<int>(c.integer("verify.points_per_axis", g.points_per_axis));
  g.interior_samples = static_cast<std::uint64_t>(c.integer("verify.interior_samples", static_cast<long long>(g.interior_samples)));
  g.exterior_samples = static_cast<std::uint64_t>(c.integer("verify.exterior_samples", static_cast<long long>(g.exterior_samples)));
  g.exterior_radius = c.number("verify.exterior_radius", g.exterior_radius);
  g.seed = static_cast<std::uint64_t>(c.integer("verify.seed", static_cast<long long>(g.seed)));
  g.tolerance = c.number("verify.tolerance", g.tolerance);
  g.escape_points_per_axis = static_cast<int>(c.integer("verify.escape_points_per_axis", g.escape_points_per_axis));
  g.validate();
  return g;
}

}  // namespace boxmin
