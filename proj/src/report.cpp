#include "boxmin/report.hpp"

#include <stdexcept>

namespace boxmin::report {

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("report: missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", to_double(r)}}; }

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return parse_rational(field(j, "exact").get<std::string>());
}

json to_json(const VerificationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"point", x.point}, {"value", x.value}, {"interior", x.interior}});
  json e = json::array();
  for (const auto& x : r.escape) {
    e.push_back({{"coordinates_at_infinity", x.coordinates_at_infinity},
                 {"samples", x.samples},
                 {"max_leading", x.max_leading},
                 {"argmax", x.argmax},
                 {"passed", x.passed}});
  }
  return {{"construction", r.construction},
          {"dimension", r.dimension},
          {"tolerance", r.tolerance},
          {"interior_samples", r.interior_samples},
          {"exterior_samples", r.exterior_samples},
          {"interior_max", r.interior_max},
          {"interior_argmax", r.interior_argmax},
          {"exterior_max", r.exterior_max},
          {"exterior_argmax", r.exterior_argmax},
          {"interior_violations", r.interior_violations},
          {"exterior_violations", r.exterior_violations},
          {"violations", v},
          {"escape", e},
          {"interpolation_conditions", r.interpolation_conditions},
          {"corner_integral", opt(r.corner_integral)},
          {"lattice_sum", opt(r.lattice_sum)},
          {"note", r.note},
          {"passed", r.passed()}};
}

VerificationReport verification_from(const json& j) {
  VerificationReport r;
  r.construction = field(j, "construction").get<std::string>();
  r.dimension = field(j, "dimension").get<int>();
  r.tolerance = field(j, "tolerance").get<double>();
  r.interior_samples = field(j, "interior_samples").get<std::uint64_t>();
  r.exterior_samples = field(j, "exterior_samples").get<std::uint64_t>();
  r.interior_max = field(j, "interior_max").get<double>();
  r.interior_argmax = field(j, "interior_argmax").get<std::vector<double>>();
  r.exterior_max = field(j, "exterior_max").get<double>();
  r.exterior_argmax = field(j, "exterior_argmax").get<std::vector<double>>();
  r.interior_violations = field(j, "interior_violations").get<std::uint64_t>();
  r.exterior_violations = field(j, "exterior_violations").get<std::uint64_t>();
  for (const auto& x : field(j, "violations")) {
    r.violations.push_back({x.at("point").get<std::vector<double>>(), x.at("value").get<double>(),
                            x.at("interior").get<bool>()});
  }
  for (const auto& x : field(j, "escape")) {
    EscapeCheck c;
    c.coordinates_at_infinity = x.at("coordinates_at_infinity").get<int>();
    c.samples = x.at("samples").get<std::uint64_t>();
    c.max_leading = x.at("max_leading").get<double>();
    c.argmax = x.at("argmax").get<std::vector<double>>();
    c.passed = x.at("passed").get<bool>();
    r.escape.push_back(std::move(c));
  }
  r.interpolation_conditions = field(j, "interpolation_conditions").get<bool>();
  r.corner_integral = opt_from<double>(j, "corner_integral");
  r.lattice_sum = opt_from<double>(j, "lattice_sum");
  r.note = field(j, "note").get<std::string>();
  return r;
}

json to_json(const analysis::PoissonReport& r) {
  return {{"sum", r.sum},
          {"tail_bound", r.tail_bound},
          {"integral", opt(r.integral)},
          {"defect", opt(r.defect)},
          {"step", r.step},
          {"radius", r.radius},
          {"within_bound", r.within_bound()}};
}

analysis::PoissonReport poisson_from(const json& j) {
  analysis::PoissonReport r;
  r.sum = field(j, "sum").get<double>();
  r.tail_bound = field(j, "tail_bound").get<double>();
  r.integral = opt_from<double>(j, "integral");
  r.defect = opt_from<double>(j, "defect");
  r.step = field(j, "step").get<std::vector<double>>();
  r.radius = field(j, "radius").get<int>();
  return r;
}

json to_json(const BoundsLedger& L) {
  json rec = json::array();
  for (const auto& r : L.records) {
    rec.push_back({{"dimension", r.dimension},
                   {"nu_lower", rational_json(r.nu_lower)},
                   {"delta_lower", rational_json(r.delta_lower)},
                   {"delta_lower_source", r.delta_lower_source},
                   {"delta_upper", r.delta_upper ? rational_json(*r.delta_upper) : json(nullptr)}});
  }
  json der = json::array();
  for (const auto& d : L.derivations) {
    der.push_back({{"from", d.from_dimension}, {"to", d.to_dimension}, {"value", rational_json(d.value)}});
  }
  return {{"records", rec},
          {"derivations", der},
          {"nc_lower", L.nc_lower},
          {"delta2_upper", L.delta2_upper ? rational_json(*L.delta2_upper) : json(nullptr)},
          {"nc_upper", L.nc_upper ? json(L.nc_upper->str()) : json(nullptr)},
          {"nc_upper_text", L.nc_upper_text()}};
}

BoundsLedger bounds_from(const json& j) {
  BoundsLedger L;
  for (const auto& x : field(j, "records")) {
    BoundsRecord r;
    r.dimension = x.at("dimension").get<int>();
    r.nu_lower = rational_from(x.at("nu_lower"));
    r.delta_lower = rational_from(x.at("delta_lower"));
    r.delta_lower_source = x.at("delta_lower_source").get<int>();
    if (!x.at("delta_upper").is_null()) r.delta_upper = rational_from(x.at("delta_upper"));
    L.records.push_back(std::move(r));
  }
  for (const auto& x : field(j, "derivations")) {
    L.derivations.push_back({x.at("from").get<int>(), x.at("to").get<int>(), rational_from(x.at("value"))});
  }
  L.nc_lower = field(j, "nc_lower").get<int>();
  if (!field(j, "delta2_upper").is_null()) L.delta2_upper = rational_from(j.at("delta2_upper"));
  if (!field(j, "nc_upper").is_null()) L.nc_upper = BigInt(j.at("nc_upper").get<std::string>());
  return L;
}

json to_json(const sieve::SieveReport& r) {
  return {{"dimension", r.dimension},
          {"M", r.M},
          {"epsilon", r.epsilon},
          {"classical_range", r.classical_range},
          {"improved_range", r.improved_range},
          {"classical_sum", r.classical_sum},
          {"improved_sum", r.improved_sum},
          {"classical_bound", r.classical_bound},
          {"improved_bound", r.improved_bound},
          {"fourier_ratio",
           {{"ratio", r.fourier_ratio.ratio},
            {"transform_at_origin", r.fourier_ratio.transform_at_origin},
            {"argmax", r.fourier_ratio.argmax},
            {"grid_step", r.fourier_ratio.grid_step},
            {"exact_transform", r.fourier_ratio.exact_transform}}},
          {"seed", opt(r.seed)},
          {"holds", r.holds()}};
}

sieve::SieveReport sieve_from(const json& j) {
  sieve::SieveReport r;
  r.dimension = field(j, "dimension").get<int>();
  r.M = field(j, "M").get<std::size_t>();
  r.epsilon = field(j, "epsilon").get<double>();
  r.classical_range = field(j, "classical_range").get<int>();
  r.improved_range = field(j, "improved_range").get<int>();
  r.classical_sum = field(j, "classical_sum").get<double>();
  r.improved_sum = field(j, "improved_sum").get<double>();
  r.classical_bound = field(j, "classical_bound").get<double>();
  r.improved_bound = field(j, "improved_bound").get<double>();
  const json& f = field(j, "fourier_ratio");
  r.fourier_ratio.ratio = f.at("ratio").get<double>();
  r.fourier_ratio.transform_at_origin = f.at("transform_at_origin").get<double>();
  r.fourier_ratio.argmax = f.at("argmax").get<std::vector<double>>();
  r.fourier_ratio.grid_step = f.at("grid_step").get<double>();
  r.fourier_ratio.exact_transform = f.at("exact_transform").get<bool>();
  r.seed = opt_from<std::uint64_t>(j, "seed");
  return r;
}

json to_json(const lpsearch::LPResult& r, const lpsearch::LPModel& model) {
  json basis = json::array();
  for (const auto& b : model.basis) basis.push_back({{"ones", b.ones}, {"twos", b.twos}});
  json rounds = json::array();
  for (const auto& x : r.rounds) {
    rounds.push_back({{"round", x.round},
                      {"objective", x.objective},
                      {"rows", x.rows},
                      {"checked_points", x.checked_points},
                      {"cuts_added", x.cuts_added},
                      {"max_violation", x.max_violation},
                      {"iterations", x.iterations}});
  }
  return {{"dimension", model.dimension},
          {"status", lp::to_string(r.status)},
          {"basis", basis},
          {"coefficients", r.coefficients},
          {"lp_coefficients", r.lp_coefficients},
          {"blend_weight", r.blend_weight},
          {"objective_value", r.objective_value},
          {"recomputed_objective", r.recomputed_objective},
          {"dual_objective", r.dual_objective},
          {"verified_objective", opt(r.verified_objective)},
          {"verification", r.verification ? to_json(*r.verification) : json(nullptr)},
          {"rounds", rounds},
          {"refined_after_unbounded", r.refined_after_unbounded},
          {"message", r.message}};
}

json to_json(const box::ThresholdReport& r) {
  return {{"dimension", r.dimension},
          {"selberg_threshold", r.selberg_threshold},
          {"montgomery_threshold", r.montgomery_threshold},
          {"crossover_delta", opt(r.crossover_delta)},
          {"integrals_identical", r.integrals_identical},
          {"montgomery_below_selberg", r.montgomery_below_selberg}};
}

json to_json(const lowdim::IdentityReport& r) {
  return {{"target", to_string(r.target)},
          {"first_form", to_string(r.first_form)},
          {"second_form", to_string(r.second_form)},
          {"first_matches", r.first_matches},
          {"second_matches", r.second_matches},
          {"inequality_samples", r.inequality_samples},
          {"inequality_max_excess", r.inequality_max_excess},
          {"inequality_argmax", r.inequality_argmax},
          {"inequality_holds", r.inequality_holds},
          {"boundary_excess", r.boundary_excess},
          {"passed", r.passed()}};
}

json to_json(const lowdim::LatticeReport& r) {
  json corners = json::array();
  for (const auto& c : r.corners) corners.push_back({{"point", c.point}, {"value", rational_json(c.value)}});
  return {{"dimension", r.dimension},
          {"radius", r.radius},
          {"origin_value", r.origin_value},
          {"checked_points", r.checked_points},
          {"max_noncorner_abs", r.max_noncorner_abs},
          {"max_noncorner_point", r.max_noncorner_point},
          {"corners", corners},
          {"corner_sum", rational_json(r.corner_sum)},
          {"poisson_total", rational_json(r.poisson_total)},
          {"matches_integral", r.matches_integral},
          {"passed", r.passed()}};
}

json to_json(const analysis::FourierEstimate& e) {
  return {{"value", e.value},
          {"imaginary", e.imaginary},
          {"truncation_bound", e.truncation_bound},
          {"aliasing", e.aliasing}};
}

json to_json(const analysis::FundamentalReport& r) {
  return {{"value_at_origin", r.value_at_origin},
          {"transform_at_origin", r.transform_at_origin},
          {"exact_transform_at_origin",
           r.exact_transform_at_origin ? rational_json(*r.exact_transform_at_origin) : json(nullptr)},
          {"slack", r.slack},
          {"holds", r.holds},
          {"equality_case", r.equality_case},
          {"tolerance", r.tolerance}};
}

json envelope(const std::string& kind, json body) {
  return {{"schema_version", schema_version}, {"kind", kind}, {"result", std::move(body)}};
}

const json& open_envelope(const json& j, const std::string& kind) {
  if (field(j, "schema_version").get<int>() != schema_version) {
    throw std::invalid_argument("report: unsupported schema_version");
  }
  if (field(j, "kind").get<std::string>() != kind) {
    throw std::invalid_argument("report: expected kind \"" + kind + "\"");
  }
  return field(j, "result");
}

}  // namespace boxmin::report
