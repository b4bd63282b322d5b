// boxmin: command-line access to the box minorant library.
//
// Exit codes: 0 all checks passed, 1 a mathematical violation was found,
// 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "boxmin/analysis.hpp"
#include "boxmin/bounds.hpp"
#include "boxmin/box.hpp"
#include "boxmin/config.hpp"
#include "boxmin/kernels.hpp"
#include "boxmin/lowdim.hpp"
#include "boxmin/lpsearch.hpp"
#include "boxmin/report.hpp"
#include "boxmin/repro.hpp"
#include "boxmin/selberg1d.hpp"
#include "boxmin/sieve.hpp"

using namespace boxmin;
using report::json;

namespace {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "text";
  std::string out;
  std::string config_path;
  int threads = 0;
  Config config;
};

struct Params {
  std::string construction;
  int dim = 0;
  double delta = 1.0;
  std::vector<double> box;
  std::vector<double> interval;
  std::string side = "minorant";
  std::vector<std::string> at;
  std::vector<std::string> coeffs;
  // verify
  int points_per_axis = -1;
  long long interior_samples = -1;
  long long exterior_samples = -1;
  long long seed = -1;
  // thresholds
  std::string dims = "1..8";
  // poisson / fourier
  int radius = 60;
  std::vector<double> t;
  std::vector<std::string> xi;
  double step = 0.25;
  double fourier_radius = 200.0;
  bool ratio = false;
  double ratio_step = 0.01;
  // sieve
  std::string points_file;
  std::size_t random_points = 0;
  double eps = 0.25;
  // bounds
  bool from_paper = false;
  std::string delta2_upper;
  // repro
  std::vector<int> criteria;
  std::vector<int> lp_dims;
};

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw usage_error("not a number list: " + text);
    }
  }
  if (v.empty()) throw usage_error("empty point");
  return v;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw usage_error("bad range " + text + " (expected a..b)");
  }
}

std::string show(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

// Flattens a JSON object into key,value lines.
void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else {
    os << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  json body;
  std::string text;
  std::string csv;  // empty: flattened JSON
  int exit_code = 0;
};

void emit(const Common& c, const std::string& kind, const Output& o) {
  std::ostringstream os;
  if (c.format == "json") {
    os << report::envelope(kind, o.body).dump(2) << "\n";
  } else if (c.format == "csv") {
    if (!o.csv.empty()) os << o.csv;
    else {
      os << "key,value\n";
      flatten(o.body, "", os);
    }
  } else {
    os << o.text;
  }
  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << os.str();
  }
}

BandlimitedFunction construction_function(const Params& p) {
  const std::string& c = p.construction;
  if (c == "paper") {
    if (p.dim < 2 || p.dim > 5) throw usage_error("paper requires --dim in 2..5");
    return functions::explicit_construction(p.dim);
  }
  if (c == "selberg1d") {
    if (p.interval.size() != 2) throw usage_error("selberg1d requires --interval a,b");
    if (p.side != "minorant" && p.side != "majorant") throw usage_error("--side must be minorant or majorant");
    return functions::selberg_interval(SelbergPair(Interval(p.interval[0], p.interval[1]), p.delta,
                                                   p.side == "majorant" ? Side::majorant : Side::minorant));
  }
  if (c == "extremal1d") return functions::extremal_1d();
  if (c == "selberg-box" || c == "montgomery-box") {
    if (p.box.empty()) throw usage_error(c + " requires --box a1,b1,a2,b2,...");
    const Box B = Box::from_bounds(p.box);
    return c == "selberg-box" ? functions::selberg_box(B, p.delta) : functions::montgomery_box(B, p.delta);
  }
  if (c == "coeffs") {
    if (p.coeffs.empty() || p.dim < 1) throw usage_error("coeffs requires --dim and --coeffs");
    std::vector<Rational> v;
    for (const auto& s : p.coeffs) v.push_back(parse_rational(s));
    if (v.size() != symmetric_basis(p.dim).size()) throw usage_error("wrong number of coefficients for this dimension");
    return functions::from_polynomial(SymmetricQuartic(p.dim, v), "candidate");
  }
  throw usage_error("unknown construction " + c);
}

Output cmd_eval(const Params& p) {
  const auto F = construction_function(p);
  if (p.at.empty()) throw usage_error("eval requires at least one --at point");
  Output o;
  o.body = json::array();
  std::ostringstream text, csv;
  csv << "point,value\n";
  for (const auto& s : p.at) {
    const auto x = parse_point(s);
    if (static_cast<int>(x.size()) != F.dimension) throw usage_error("point " + s + " has the wrong dimension");
    const double v = F(x);
    o.body.push_back({{"point", x}, {"value", v}});
    text << s << " -> " << show(v) << "\n";
    csv << "\"" << s << "\"," << show(v) << "\n";
  }
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

Output cmd_integral(const Params& p) {
  Output o;
  const std::string& c = p.construction;
  std::optional<Rational> exact;
  double value = 0.0;
  if (c == "paper") {
    if (p.dim < 2 || p.dim > 5) throw usage_error("paper requires --dim in 2..5");
    exact = lowdim::corner_integral(lowdim::explicit_polynomial(p.dim));
  } else if (c == "selberg-box" || c == "montgomery-box") {
    if (!p.box.empty()) {
      const auto F = construction_function(p);
      value = *F.integral();
    } else {
      if (p.dim < 1) throw usage_error(c + " requires --dim with --delta, or --box");
      const Rational d = parse_rational(show(p.delta));
      exact = c == "selberg-box" ? box::selberg_cube_integral<Rational>(p.dim, d)
                                 : box::montgomery_cube_integral<Rational>(p.dim, d);
    }
  } else {
    const auto F = construction_function(p);
    const auto v = F.integral();
    if (!v) throw usage_error("no closed-form integral for " + c);
    if (F.known_integral) exact = F.known_integral;
    value = *v;
  }
  if (exact) {
    o.body = {{"construction", c}, {"integral", report::rational_json(*exact)}};
    o.text = to_string(*exact) + " (" + show(to_double(*exact)) + ")\n";
  } else {
    o.body = {{"construction", c}, {"integral", value}};
    o.text = show(value) + "\n";
  }
  return o;
}

Output cmd_verify(const Params& p, const Common& c) {
  SymmetricQuartic poly(1);
  std::string name;
  if (p.construction == "paper") {
    if (p.dim < 2 || p.dim > 5) throw usage_error("paper requires --dim in 2..5");
    poly = lowdim::explicit_polynomial(p.dim);
    name = "F" + std::to_string(p.dim);
  } else if (p.construction == "coeffs") {
    if (p.dim < 1 || p.coeffs.empty()) throw usage_error("coeffs requires --dim and --coeffs");
    std::vector<Rational> v;
    for (const auto& s : p.coeffs) v.push_back(parse_rational(s));
    if (v.size() != symmetric_basis(p.dim).size()) throw usage_error("wrong number of coefficients for this dimension");
    poly = SymmetricQuartic(p.dim, v);
    name = "candidate";
  } else {
    throw usage_error("verify supports paper and coeffs");
  }
  GridSpec g;
  if (poly.dim() >= 4) {
    g.points_per_axis = 0;
    g.interior_samples = 200'000;
  } else if (poly.dim() == 3) {
    g.points_per_axis = 61;
  }
  g = grid_from(c.config, g);
  if (p.points_per_axis >= 0) g.points_per_axis = p.points_per_axis;
  if (p.interior_samples >= 0) g.interior_samples = static_cast<std::uint64_t>(p.interior_samples);
  if (p.exterior_samples >= 0) g.exterior_samples = static_cast<std::uint64_t>(p.exterior_samples);
  if (p.seed >= 0) g.seed = static_cast<std::uint64_t>(p.seed);
  g.validate();
  const auto r = lowdim::verify_admissibility(poly, g, name);
  Output o;
  o.body = report::to_json(r);
  std::ostringstream os;
  os << r.construction << " (N=" << r.dimension << "): " << r.interior_samples << " interior, " << r.exterior_samples
     << " exterior samples\n"
     << "  interior max S*P = " << show(r.interior_max) << ", violations " << r.interior_violations << "\n"
     << "  exterior max P   = " << show(r.exterior_max) << ", violations " << r.exterior_violations << "\n";
  for (const auto& e : r.escape) {
    os << "  escape k=" << e.coordinates_at_infinity << ": max leading " << show(e.max_leading)
       << (e.passed ? "" : "  VIOLATION") << "\n";
  }
  os << "  interpolation conditions " << (r.interpolation_conditions ? "hold" : "FAIL") << "\n"
     << (r.passed() ? "PASS" : "FAIL") << " (" << r.note << ")\n";
  o.text = os.str();
  o.exit_code = r.passed() ? 0 : 1;
  return o;
}

Output cmd_thresholds(const Params& p) {
  const auto [lo, hi] = parse_range(p.dims);
  if (lo < 1 || hi < lo) throw usage_error("--dims must be a..b with 1 <= a <= b");
  Output o;
  o.body = json::array();
  std::ostringstream text, csv;
  text << std::setw(4) << "N" << std::setw(14) << "selberg" << std::setw(18) << "montgomery" << "  order\n";
  csv << "N,selberg,montgomery,integrals_identical,montgomery_below_selberg\n";
  for (int n = lo; n <= hi; ++n) {
    const auto r = box::thresholds(n);
    o.body.push_back(report::to_json(r));
    const char* order = r.integrals_identical ? "identical" : (r.montgomery_below_selberg ? "montgomery lower" : "selberg lower");
    text << std::setw(4) << n << std::setw(14) << show(r.selberg_threshold) << std::setw(18)
         << show(r.montgomery_threshold) << "  " << order << "\n";
    csv << n << "," << show(r.selberg_threshold) << "," << show(r.montgomery_threshold) << ","
        << r.integrals_identical << "," << r.montgomery_below_selberg << "\n";
  }
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

Output cmd_poisson(const Params& p) {
  const auto F = construction_function(p);
  std::vector<double> t = p.t;
  if (t.empty()) t.assign(static_cast<size_t>(F.dimension), 0.5);
  if (static_cast<int>(t.size()) != F.dimension) throw usage_error("--t has the wrong dimension");
  const auto r = analysis::poisson_sum(F, t, p.radius);
  Output o;
  o.body = report::to_json(r);
  std::ostringstream os;
  os << "lattice sum " << show(r.sum) << ", tail bound " << show(r.tail_bound);
  if (r.integral) os << ", integral " << show(*r.integral) << ", defect " << show(*r.defect);
  os << "\n" << (r.within_bound() ? "PASS" : "FAIL") << "\n";
  o.text = os.str();
  o.exit_code = r.within_bound() ? 0 : 1;
  return o;
}

Output cmd_fourier(const Params& p) {
  const auto F = construction_function(p);
  Output o;
  std::ostringstream os;
  o.body = json::object();
  if (!p.xi.empty()) {
    const analysis::FourierSampler sampler(F, p.step, p.fourier_radius);
    json values = json::array();
    for (const auto& s : p.xi) {
      const auto xi = parse_point(s);
      if (static_cast<int>(xi.size()) != F.dimension) throw usage_error("--xi has the wrong dimension");
      const auto e = sampler(xi);
      json row = report::to_json(e);
      row["xi"] = xi;
      if (F.transform) row["exact"] = F.transform(xi);
      values.push_back(row);
      os << "F^(" << s << ") ~ " << show(e.value);
      if (F.transform) os << " (closed form " << show(F.transform(xi)) << ")";
      os << "\n";
    }
    o.body["values"] = values;
  }
  if (p.ratio) {
    const auto r = sieve::fourier_ratio(F, p.ratio_step);
    o.body["ratio"] = {{"ratio", r.ratio},
                       {"argmax", r.argmax},
                       {"transform_at_origin", r.transform_at_origin},
                       {"grid_step", r.grid_step},
                       {"exact_transform", r.exact_transform}};
    os << "max|F^| / F^(0) = " << show(r.ratio) << " (grid step " << r.grid_step << ", refined)\n";
  }
  if (p.xi.empty() && !p.ratio) throw usage_error("fourier needs --xi and/or --ratio");
  o.text = os.str();
  return o;
}

Output cmd_lp(const Params& p, const Common& c) {
  if (p.dim < 1 || p.dim > 5) throw usage_error("lp requires --dim in 1..5");
  auto sampling = sampling_from(c.config);
  if (p.seed >= 0) sampling.seed = static_cast<std::uint64_t>(p.seed);
  auto model = lpsearch::build_model(p.dim, sampling);
  const auto grid = grid_from(c.config, lpsearch::default_certify_grid(p.dim));
  const auto r = lpsearch::solve(model, grid);
  Output o;
  o.body = report::to_json(r, model);
  std::ostringstream os;
  os << "N=" << p.dim << ": " << lp::to_string(r.status) << "\n";
  for (const auto& x : r.rounds) {
    os << "  round " << x.round << ": objective " << show(x.objective) << ", rows " << x.rows << ", cuts "
       << x.cuts_added << ", max violation " << show(x.max_violation) << "\n";
  }
  if (r.status == lp::Status::optimal) {
    os << "  objective " << show(r.recomputed_objective) << " (solver " << show(r.objective_value) << ", dual "
       << show(r.dual_objective) << ")\n  coefficients:";
    for (size_t b = 0; b < model.basis.size(); ++b) {
      os << " [" << model.basis[b].ones << "," << model.basis[b].twos << "]=" << show(r.coefficients[b]);
    }
    if (r.blend_weight > 0) os << "\n  blended with the reference polynomial at weight " << r.blend_weight;
    os << "\n  certification " << (r.verification && r.verification->passed() ? "PASS" : "FAIL") << "\n";
  }
  if (!r.message.empty()) os << "  " << r.message << "\n";
  o.text = os.str();
  o.exit_code = r.verified_objective ? 0 : 1;
  return o;
}

Output cmd_sieve(const Params& p) {
  const auto F = construction_function(p);
  sieve::TorusPointSet pts = [&] {
    if (!p.points_file.empty()) {
      std::ifstream in(p.points_file);
      if (!in) throw usage_error("cannot open " + p.points_file);
      if (p.points_file.size() >= 5 && p.points_file.substr(p.points_file.size() - 5) == ".json") {
        std::stringstream ss;
        ss << in.rdbuf();
        return sieve::read_points_json(ss.str(), p.eps);
      }
      return sieve::read_points_csv(in, p.eps);
    }
    if (p.random_points == 0) throw usage_error("sieve needs --points FILE or --random M");
    return sieve::random_point_set(F.dimension, p.random_points, p.eps,
                                   static_cast<std::uint64_t>(p.seed >= 0 ? p.seed : 1));
  }();
  const auto r = sieve::sieve_bounds(pts, F, p.eps);
  Output o;
  o.body = report::to_json(r);
  std::ostringstream os;
  os << "M = " << r.M << ", eps = " << r.epsilon << "\n"
     << "  classical bound " << show(r.classical_bound) << " (|n| <= " << r.classical_range << ")\n"
     << "  improved bound  " << show(r.improved_bound) << " (|n| <= " << r.improved_range << ", ratio "
     << show(r.fourier_ratio.ratio) << ")\n"
     << (r.holds() ? "PASS" : "FAIL") << "\n";
  o.text = os.str();
  o.exit_code = r.holds() ? 0 : 1;
  return o;
}

Output cmd_bounds(const Params& p) {
  if (!p.from_paper) throw usage_error("bounds currently needs --from-paper");
  std::optional<Rational> u;
  if (!p.delta2_upper.empty()) u = parse_rational(p.delta2_upper);
  const auto L = bounds_ledger(known_nu_lowers(), u);
  Output o;
  o.body = report::to_json(L);
  std::ostringstream os;
  os << std::setw(4) << "N" << std::setw(14) << "nu >=" << std::setw(14) << "Delta >=" << std::setw(8) << "from"
     << std::setw(14) << "Delta <=" << "\n";
  for (const auto& r : L.records) {
    os << std::setw(4) << r.dimension << std::setw(14) << to_string(r.nu_lower) << std::setw(14)
       << to_string(r.delta_lower) << std::setw(8) << r.delta_lower_source << std::setw(14)
       << (r.delta_upper ? to_string(*r.delta_upper) : "-") << "\n";
  }
  os << "derived:";
  for (const auto& d : L.derivations) {
    os << " Delta(" << d.to_dimension << ") >= " << to_string(d.value) << " [from N=" << d.from_dimension << "];";
  }
  os << "\n" << L.nc_lower << " <= N_c <= " << L.nc_upper_text() << "\n";
  o.text = os.str();
  return o;
}

Output cmd_repro(const Params& p, const Common& c) {
  repro::Options opt;
  if (!p.lp_dims.empty()) opt.lp_dimensions = p.lp_dims;
  if (p.seed >= 0) opt.seed = static_cast<std::uint64_t>(p.seed);
  const bool live = c.format == "text" && c.out.empty();
  const auto results = repro::run(p.criteria, opt, [&](const repro::CriterionResult& r) {
    if (live) std::cout << repro::format_line(r) << std::endl;
  });
  Output o;
  o.body = json::array();
  std::ostringstream csv, text;
  csv << "id,title,passed,seconds,detail\n";
  int failed = 0;
  for (const auto& r : results) {
    o.body.push_back({{"id", r.id},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"known_deviation", r.known_deviation},
                      {"seconds", r.seconds},
                      {"detail", r.detail}});
    csv << r.id << ",\"" << r.title << "\"," << r.passed << "," << r.seconds << ",\"" << r.detail << "\"\n";
    if (!live) text << repro::format_line(r) << "\n";
    if (!r.passed) ++failed;
  }
  text << (results.size() - static_cast<size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  o.text = text.str();
  o.csv = csv.str();
  o.exit_code = failed ? 1 : 0;
  return o;
}

void add_construction(CLI::App* cmd, Params& p, bool required = true) {
  auto* opt = cmd->add_option("construction", p.construction,
                              "paper | selberg1d | extremal1d | selberg-box | montgomery-box | coeffs");
  if (required) opt->required();
  cmd->add_option("--dim", p.dim, "dimension");
  cmd->add_option("--delta", p.delta, "band limit (box half-width for cube integrals)");
  cmd->add_option("--box", p.box, "box bounds a1,b1,a2,b2,...")->delimiter(',');
  cmd->add_option("--interval", p.interval, "interval a,b")->delimiter(',');
  cmd->add_option("--side", p.side, "minorant | majorant");
  cmd->add_option("--coeffs", p.coeffs, "symmetric basis coefficients (p/q or decimals)")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box minorant toolkit"};
  app.require_subcommand(1);
  Common common;
  Params p;
  app.add_option("--format", common.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", common.out, "write the report to this file");
  app.add_option("--config", common.config_path, "key = value configuration file");
  app.add_option("--threads", common.threads, "worker threads (default: all)");

  auto* eval = app.add_subcommand("eval", "evaluate a construction at points");
  add_construction(eval, p);
  eval->add_option("--at", p.at, "point x1,x2,... (repeatable)")->required();

  auto* integral = app.add_subcommand("integral", "exact or closed-form integral");
  add_construction(integral, p);

  auto* verify = app.add_subcommand("verify", "sampled admissibility check");
  add_construction(verify, p);
  verify->add_option("--points-per-axis", p.points_per_axis, "interior tensor grid nodes per axis");
  verify->add_option("--interior-samples", p.interior_samples, "extra quasi-random interior samples");
  verify->add_option("--exterior-samples", p.exterior_samples, "exterior samples");
  verify->add_option("--seed", p.seed, "sampling seed");

  auto* thresholds = app.add_subcommand("thresholds", "box positivity thresholds");
  thresholds->add_option("--dims", p.dims, "range a..b");

  auto* poisson = app.add_subcommand("poisson", "truncated Poisson sum against the integral");
  add_construction(poisson, p);
  poisson->add_option("--t", p.t, "lattice offset")->delimiter(',');
  poisson->add_option("--radius", p.radius, "truncation radius");

  auto* fourier = app.add_subcommand("fourier", "sampled Fourier transform");
  add_construction(fourier, p);
  fourier->add_option("--xi", p.xi, "frequency (repeatable)");
  fourier->add_option("--step", p.step, "sampling step h");
  fourier->add_option("--radius", p.fourier_radius, "sampling radius");
  fourier->add_flag("--ratio", p.ratio, "estimate max|F^| / F^(0)");
  fourier->add_option("--ratio-step", p.ratio_step, "grid step of the ratio search");

  auto* lpcmd = app.add_subcommand("lp", "LP search over symmetric quartics");
  lpcmd->add_option("--dim", p.dim, "dimension 1..5")->required();
  lpcmd->add_option("--seed", p.seed, "sampling seed");

  auto* sievecmd = app.add_subcommand("sieve", "large sieve bounds for a point set");
  add_construction(sievecmd, p, false);
  sievecmd->add_option("--points", p.points_file, "CSV or JSON point file");
  sievecmd->add_option("--random", p.random_points, "draw M random separated points");
  sievecmd->add_option("--eps", p.eps, "separation from the lattice");
  sievecmd->add_option("--seed", p.seed, "seed for --random");

  auto* bounds = app.add_subcommand("bounds", "nu / Delta bounds ledger");
  bounds->add_flag("--from-paper", p.from_paper, "start from the known lower bounds");
  bounds->add_option("--delta2-upper", p.delta2_upper, "upper bound for Delta(2), as p/q or decimal");

  auto* reprocmd = app.add_subcommand("repro", "run the reproduction suite");
  reprocmd->add_option("--criteria", p.criteria, "subset of criteria ids")->delimiter(',');
  reprocmd->add_option("--lp-dims", p.lp_dims, "LP dimensions to solve")->delimiter(',');
  reprocmd->add_option("--seed", p.seed, "seed");

  app.fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!common.config_path.empty()) {
      common.config = Config::load(common.config_path);
      if (common.threads == 0) common.threads = static_cast<int>(common.config.integer("threads", 0));
      if (const auto f = common.config.text("format"); f && common.format == "text") common.format = *f;
      if (common.format != "text" && common.format != "json" && common.format != "csv") {
        throw usage_error("config: format must be text, json or csv");
      }
    }
    kernels::set_worker_count(common.threads);

    Output o;
    std::string kind;
    if (*eval) kind = "eval", o = cmd_eval(p);
    else if (*integral) kind = "integral", o = cmd_integral(p);
    else if (*verify) kind = "verification", o = cmd_verify(p, common);
    else if (*thresholds) kind = "thresholds", o = cmd_thresholds(p);
    else if (*poisson) kind = "poisson", o = cmd_poisson(p);
    else if (*fourier) kind = "fourier", o = cmd_fourier(p);
    else if (*lpcmd) kind = "lp", o = cmd_lp(p, common);
    else if (*sievecmd) {
      if (p.construction.empty()) {
        p.construction = "paper";
        if (p.dim == 0) p.dim = 2;
      }
      kind = "sieve", o = cmd_sieve(p);
    } else if (*bounds) kind = "bounds", o = cmd_bounds(p);
    else kind = "repro", o = cmd_repro(p, common);

    for (const auto& k : common.config.unused()) {
      if (k != "threads" && k != "format") std::cerr << "warning: config key " << k << " is not used by this command\n";
    }
    emit(common, kind, o);
    return o.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
