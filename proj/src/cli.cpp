#include "interp/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "interp/errors.hpp"
#include "interp/fuchsian.hpp"
#include "interp/gramian.hpp"
#include "interp/kernels.hpp"
#include "interp/partition.hpp"
#include "interp/pick.hpp"

namespace interp::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Payload parsing. Everything here runs before any solver is touched.

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

double parse_number(const json& j, const std::string& where) {
  if (!j.is_number()) invalid(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) invalid(where, "expected a finite number");
  return v;
}

int parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) invalid(where, "expected an integer");
  return j.get<int>();
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) invalid(where, "expected [re, im]");
  return {parse_number(j[0], where + "[0]"), parse_number(j[1], where + "[1]")};
}

Complex parse_disk_point(const json& j, const std::string& where) {
  const Complex z = parse_complex(j, where);
  try {
    require_in_disk(z);
  } catch (const DomainError& e) {
    invalid(where, e.what());
  }
  return z;
}

bool looks_like_disk_point(const json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

const json& require_key(const json& payload, const char* key) {
  if (!payload.contains(key)) invalid(key, "missing required field");
  return payload.at(key);
}

std::vector<Complex> parse_disk_points(const json& j, const std::string& where, std::size_t min_count = 1) {
  if (!j.is_array()) invalid(where, "expected an array of [re, im] points");
  if (j.size() < min_count) invalid(where, "expected at least " + std::to_string(min_count) + " points");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_disk_point(j[i], where + "[" + std::to_string(i) + "]"));
  try {
    require_distinct(std::span<const Complex>(out));
  } catch (const ArgumentError& e) {
    invalid(where, e.what());
  }
  return out;
}

PolyPointSet parse_poly_points(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) invalid(where, "expected a nonempty array of points");
  PolyPointSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (looks_like_disk_point(j[i])) {
      out.push_back({parse_disk_point(j[i], at)});
      continue;
    }
    if (!j[i].is_array() || j[i].empty()) invalid(at, "expected [re, im] or a list of [re, im] coordinates");
    PolyPoint p;
    for (std::size_t l = 0; l < j[i].size(); ++l) p.push_back(parse_disk_point(j[i][l], at + "[" + std::to_string(l) + "]"));
    out.push_back(std::move(p));
  }
  for (const auto& p : out) {
    if (p.size() != out.front().size()) invalid(where, "points have mixed dimensions");
  }
  try {
    require_distinct(std::span<const PolyPoint>(out));
  } catch (const ArgumentError& e) {
    invalid(where, e.what());
  }
  return out;
}

KernelSpec parse_kernel(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    invalid(where, "expected {\"coeffs\": [c1, c2, ...]}");
  }
  std::vector<double> coeffs;
  for (std::size_t i = 0; i < j.at("coeffs").size(); ++i) {
    coeffs.push_back(parse_number(j.at("coeffs")[i], where + ".coeffs[" + std::to_string(i) + "]"));
  }
  try {
    return KernelSpec(std::move(coeffs));
  } catch (const DomainError& e) {
    invalid(where, e.what());
  }
}

KernelSpec parse_optional_kernel(const json& payload) {
  return payload.contains("kernel") ? parse_kernel(payload.at("kernel"), "kernel") : KernelSpec::szego();
}

ProductKernelSpec parse_product_kernel(const json& payload, std::size_t dim) {
  if (!payload.contains("kernels")) {
    if (payload.contains("kernel")) {
      return ProductKernelSpec(std::vector<KernelSpec>(dim, parse_kernel(payload.at("kernel"), "kernel")));
    }
    return ProductKernelSpec::szego(dim);
  }
  const json& ks = payload.at("kernels");
  if (!ks.is_array() || ks.size() != dim) {
    invalid("kernels", "expected one kernel per coordinate (" + std::to_string(dim) + ")");
  }
  std::vector<KernelSpec> factors;
  for (std::size_t l = 0; l < dim; ++l) factors.push_back(parse_kernel(ks[l], "kernels[" + std::to_string(l) + "]"));
  return ProductKernelSpec(std::move(factors));
}

void check_keys(const json& payload, std::initializer_list<const char*> allowed) {
  if (!payload.is_object()) throw ValidationError("payload must be a JSON object");
  std::set<std::string> ok{"schema_version", "config", "command"};
  for (const char* k : allowed) ok.insert(k);
  for (const auto& item : payload.items()) {
    if (!ok.count(item.key())) invalid(item.key(), "unknown field");
  }
  if (payload.contains("schema_version")) {
    if (!payload.at("schema_version").is_number_integer() || payload.at("schema_version").get<int>() != kSchemaVersion) {
      invalid("schema_version", "unsupported schema version (expected 1)");
    }
  }
}

std::vector<MobiusMap> parse_generators(const json& group) {
  if (!group.contains("generators")) return {};
  const json& gens = group.at("generators");
  if (!gens.is_array()) invalid("group.generators", "expected an array");
  std::vector<MobiusMap> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string at = "group.generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    if (!g.is_object()) invalid(at, "expected {\"theta\": real, \"a\": [re, im]}");
    const double theta = g.contains("theta") ? parse_number(g.at("theta"), at + ".theta") : 0.0;
    const Complex a = g.contains("a") ? parse_complex(g.at("a"), at + ".a") : Complex(0.0);
    if (!(std::abs(a) < 1.0)) invalid(at + ".a", "must lie in the open unit disk");
    out.emplace_back(theta, a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output helpers.

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const HermitianMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.size(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json riesz_json(const RieszReport& r) {
  return {{"lambda_min", r.lambda_min},
          {"lambda_max", r.lambda_max},
          {"carleson_constant", r.carleson_constant},
          {"is_riesz", r.is_riesz},
          {"tolerance", r.tolerance}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

BisectionOptions bisection_options(const Config& c) {
  BisectionOptions o;
  o.solver.tolerance = c.sdp_tolerance;
  o.solver.max_iterations = c.sdp_max_iterations;
  o.solver.stall_window = c.stall_window;
  o.max_iterations = c.bisection_iterations;
  o.tolerance = c.bisection_tolerance;
  o.upper_bound = c.bisection_upper_bound;
  return o;
}

void require_finite(const json& j, const std::string& where) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) {
    throw NumericError("non-finite value in report field " + where);
  }
  if (j.is_object()) {
    for (const auto& item : j.items()) require_finite(item.value(), where + "." + item.key());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) require_finite(j[i], where + "[" + std::to_string(i) + "]");
  }
}

// ---------------------------------------------------------------------------
// Commands.

Outcome analyze_disk(const json& payload, const Config& config) {
  check_keys(payload, {"points", "kernel"});
  const std::vector<Complex> points = parse_disk_points(require_key(payload, "points"), "points");
  const KernelSpec kernel = parse_optional_kernel(payload);
  const std::span<const Complex> pts(points);

  Outcome out;
  const HermitianMatrix gram = normalized_gramian(kernel, pts);
  const RieszReport riesz = riesz_bounds(gram, config.riesz_tolerance);
  json r = riesz_json(riesz);
  r["n"] = points.size();
  r["weak_separation"] = points.size() >= 2 ? json(weak_separation(kernel, pts)) : json(nullptr);
  if (kernel.is_szego()) {
    r["strong_separation"] = strong_separation_disk(pts);
  } else {
    r["strong_separation"] = nullptr;
    out.warnings.push_back("strong_separation is defined for the Szego kernel only");
  }
  MultiplierDistanceOptions md;
  md.alpha = config.alpha;
  md.tolerance = config.multiplier_tolerance;
  json distances = json::array();
  double min_distance = 1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Complex> rest;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k != i) rest.push_back(points[k]);
    }
    const double dist = multiplier_distance(points[i], rest, kernel, md);
    distances.push_back(dist);
    min_distance = std::min(min_distance, dist);
  }
  r["multiplier_distances"] = std::move(distances);
  r["multiplier_separation"] = min_distance;
  if (config.alpha != 1.0) out.warnings.push_back("multiplier distances scaled by user-supplied alpha");
  if (config.include_matrices) r["normalized_gramian"] = matrix_json(gram);
  out.results = std::move(r);
  return out;
}

Outcome analyze_polydisc(const json& payload, const Config& config) {
  check_keys(payload, {"points", "kernels", "kernel"});
  const PolyPointSet points = parse_poly_points(require_key(payload, "points"), "points");
  const ProductKernelSpec specs = parse_product_kernel(payload, points.front().size());
  const BisectionOptions opts = bisection_options(config);

  Outcome out;
  const double m = condition_a_constant(points, specs, opts);
  const double n = condition_b_constant(points, specs, opts);
  const HermitianMatrix gram = normalized_gramian(specs, std::span<const PolyPoint>(points));
  const RieszReport riesz = riesz_bounds(gram, config.riesz_tolerance);
  json r;
  r["M"] = m;
  r["N"] = n;
  r["d"] = specs.dim();
  r["n"] = points.size();
  r["product_kernel"] = riesz_json(riesz);
  // The product kernel is itself admissible, so its Gramian bounds must sit
  // inside [N, M] up to the bisection and solver tolerances.
  const double slack = 10.0 * (config.bisection_tolerance + config.sdp_tolerance);
  r["M_ge_lambda_max"] = m + slack >= riesz.lambda_max;
  r["N_le_lambda_min"] = n - slack <= riesz.lambda_min;
  if (config.include_matrices) r["normalized_gramian"] = matrix_json(gram);
  out.warnings.push_back("infeasibility verdicts inside the bisection mean no decomposition was found within tolerance");
  out.results = std::move(r);
  return out;
}

Outcome analyze_fuchsian(const json& payload, const Config& config) {
  check_keys(payload, {"points", "group", "degree"});
  const std::vector<Complex> points = parse_disk_points(require_key(payload, "points"), "points");
  const json& group = require_key(payload, "group");
  if (!group.is_object()) invalid("group", "expected an object");
  for (const auto& item : group.items()) {
    if (item.key() != "generators" && item.key() != "max_word_length") invalid("group." + item.key(), "unknown field");
  }
  const std::vector<MobiusMap> generators = parse_generators(group);
  const int length = group.contains("max_word_length") ? parse_int(group.at("max_word_length"), "group.max_word_length") : 0;
  if (length < 0) invalid("group.max_word_length", "must be nonnegative");
  const int degree = payload.contains("degree") ? parse_int(payload.at("degree"), "degree") : config.gamma_degree;
  if (degree < 1) invalid("degree", "must be at least 1");

  GammaAnalysisOptions opts;
  opts.sv_cutoff = config.sv_cutoff;
  opts.riesz_tolerance = config.riesz_tolerance;
  opts.element_cap = static_cast<std::size_t>(config.group_element_cap);
  const GammaSequenceReport rep = analyze_gamma_sequence(points, generators, degree, length, opts);

  Outcome out;
  json r;
  r["gamma_kernel"] = {{"degree", rep.degree},
                       {"dimension", rep.kernel_dimension},
                       {"invariance_residual", rep.invariance_residual},
                       {"riesz", riesz_json(rep.gamma_riesz)},
                       {"weak_separation", optional_json(rep.gamma_weak_separation)}};
  r["orbit"] = {{"max_word_length", length},
                {"group_size", rep.group_size},
                {"orbit_size", rep.orbit_size},
                {"dropped_near_boundary", rep.orbit_dropped},
                {"riesz", riesz_json(rep.orbit_riesz)},
                {"weak_separation", optional_json(rep.orbit_weak_separation)},
                {"strong_separation", rep.orbit_strong_separation}};
  out.results = std::move(r);
  out.warnings = rep.warnings;
  return out;
}

Outcome pick(const json& payload, const Config& config) {
  check_keys(payload, {"points", "values", "bound", "kernel", "kernels"});
  PickProblem problem;
  problem.points = parse_poly_points(require_key(payload, "points"), "points");
  const json& values = require_key(payload, "values");
  if (!values.is_array()) invalid("values", "expected an array of [re, im]");
  for (std::size_t i = 0; i < values.size(); ++i) problem.values.push_back(parse_complex(values[i], "values[" + std::to_string(i) + "]"));
  if (problem.values.size() != problem.points.size()) invalid("values", "expected one value per point");
  problem.bound = payload.contains("bound") ? parse_number(payload.at("bound"), "bound") : 1.0;
  if (!(problem.bound > 0.0)) invalid("bound", "must be positive");
  const std::size_t d = problem.dim();
  const ProductKernelSpec specs = parse_product_kernel(payload, d);
  const BisectionOptions opts = bisection_options(config);

  Outcome out;
  json r;
  r["d"] = d;
  r["bound"] = problem.bound;
  if (d == 1) {
    const PickTestResult test = pick_psd_test(problem, specs.factor(0));
    r["feasible"] = test.feasible;
    r["margin"] = test.margin;
  } else {
    const auto n = static_cast<Eigen::Index>(problem.points.size());
    CVector w(n);
    for (Eigen::Index i = 0; i < n; ++i) w(i) = problem.values[i];
    const HermitianMatrix target =
        problem.bound * problem.bound * HermitianMatrix::ones(n) - HermitianMatrix(w * w.adjoint());
    const AglerResult agler = agler_feasible(problem.points, specs, target, opts.solver);
    r["feasible"] = agler.feasible;
    r["affine_residual"] = agler.decomposition.affine_residual;
    r["psd_margin"] = agler.decomposition.psd_margin;
    r["iterations"] = agler.iterations;
    if (!agler.feasible) out.warnings.push_back("no Agler decomposition found within tolerance; this is not a proof of infeasibility");
  }
  r["constant"] = pick_constant_for_values(problem.points, specs, problem.values, opts);
  out.results = std::move(r);
  return out;
}

Outcome partition(const json& payload, const Config& config) {
  check_keys(payload, {"points", "kernel", "epsilon", "tolerance"});
  const std::vector<Complex> points = parse_disk_points(require_key(payload, "points"), "points");
  const KernelSpec kernel = parse_optional_kernel(payload);
  const double epsilon = parse_number(require_key(payload, "epsilon"), "epsilon");
  if (!(epsilon > 0.0 && epsilon < 1.0)) invalid("epsilon", "must lie in (0, 1)");
  const double tolerance = payload.contains("tolerance") ? parse_number(payload.at("tolerance"), "tolerance") : config.riesz_tolerance;
  const std::span<const Complex> pts(points);

  Outcome out;
  PartitionResult part = verify_partition(partition_separated(kernel, pts, epsilon), kernel, pts, tolerance);
  const RieszReport whole = riesz_bounds(normalized_gramian(kernel, pts), tolerance);
  std::size_t max_degree = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t degree = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i && rho_semimetric(kernel, points[i], points[j]) < epsilon) ++degree;
    }
    max_degree = std::max(max_degree, degree);
  }
  json r;
  r["classes"] = part.classes;
  r["class_count"] = part.classes.size();
  r["class_count_bound"] = max_degree + 1;
  r["per_class_lambda_min"] = part.per_class_lambda_min;
  r["verified"] = part.verified;
  r["epsilon"] = epsilon;
  r["tolerance"] = tolerance;
  r["bessel_bound"] = whole.lambda_max;
  r["bessel_hypothesis_ok"] = whole.lambda_max <= config.bessel_threshold;
  if (whole.lambda_max > config.bessel_threshold) {
    out.warnings.push_back("Bessel bound of the input exceeds bessel_threshold; the partition guarantee presumes a Bessel sequence");
  }
  out.results = std::move(r);
  return out;
}

std::string describe_exit(int code) {
  return code == kExitOk ? "ok" : code == kExitValidation ? "validation error" : "numeric error";
}

} // namespace

// ---------------------------------------------------------------------------

void Config::merge(const json& j) {
  if (j.is_null()) return;
  if (!j.is_object()) throw ValidationError("config: expected an object");
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    const json& v = item.value();
    const std::string at = "config." + k;
    if (k == "sdp_tolerance") sdp_tolerance = parse_number(v, at);
    else if (k == "sdp_max_iterations") sdp_max_iterations = parse_int(v, at);
    else if (k == "stall_window") stall_window = parse_int(v, at);
    else if (k == "bisection_iterations") bisection_iterations = parse_int(v, at);
    else if (k == "bisection_tolerance") bisection_tolerance = parse_number(v, at);
    else if (k == "bisection_upper_bound") bisection_upper_bound = parse_number(v, at);
    else if (k == "riesz_tolerance") riesz_tolerance = parse_number(v, at);
    else if (k == "alpha") alpha = parse_number(v, at);
    else if (k == "multiplier_tolerance") multiplier_tolerance = parse_number(v, at);
    else if (k == "gamma_degree") gamma_degree = parse_int(v, at);
    else if (k == "sv_cutoff") sv_cutoff = parse_number(v, at);
    else if (k == "group_element_cap") group_element_cap = parse_int(v, at);
    else if (k == "bessel_threshold") bessel_threshold = parse_number(v, at);
    else if (k == "include_matrices") {
      if (!v.is_boolean()) invalid(at, "expected a boolean");
      include_matrices = v.get<bool>();
    } else {
      invalid(at, "unknown config key");
    }
  }
  if (!(sdp_tolerance > 0.0)) invalid("config.sdp_tolerance", "must be positive");
  if (sdp_max_iterations < 1) invalid("config.sdp_max_iterations", "must be at least 1");
  if (stall_window < 1) invalid("config.stall_window", "must be at least 1");
  if (bisection_iterations < 1) invalid("config.bisection_iterations", "must be at least 1");
  if (!(bisection_tolerance > 0.0)) invalid("config.bisection_tolerance", "must be positive");
  if (!(bisection_upper_bound > 1.0)) invalid("config.bisection_upper_bound", "must exceed 1");
  if (!(alpha > 0.0)) invalid("config.alpha", "must be positive");
  if (!(multiplier_tolerance > 0.0)) invalid("config.multiplier_tolerance", "must be positive");
  if (gamma_degree < 1) invalid("config.gamma_degree", "must be at least 1");
  if (!(sv_cutoff > 0.0)) invalid("config.sv_cutoff", "must be positive");
  if (group_element_cap < 1) invalid("config.group_element_cap", "must be at least 1");
}

json Config::to_json() const {
  return {{"sdp_tolerance", sdp_tolerance},
          {"sdp_max_iterations", sdp_max_iterations},
          {"stall_window", stall_window},
          {"bisection_iterations", bisection_iterations},
          {"bisection_tolerance", bisection_tolerance},
          {"bisection_upper_bound", bisection_upper_bound},
          {"riesz_tolerance", riesz_tolerance},
          {"alpha", alpha},
          {"multiplier_tolerance", multiplier_tolerance},
          {"gamma_degree", gamma_degree},
          {"sv_cutoff", sv_cutoff},
          {"group_element_cap", group_element_cap},
          {"bessel_threshold", bessel_threshold},
          {"include_matrices", include_matrices}};
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"analyze-disk", "analyze-polydisc", "analyze-fuchsian", "pick",
                                                 "partition"};
  return names;
}

Outcome execute(const std::string& command, const json& payload, const Config& config) {
  Outcome out;
  if (command == "analyze-disk") out = analyze_disk(payload, config);
  else if (command == "analyze-polydisc") out = analyze_polydisc(payload, config);
  else if (command == "analyze-fuchsian") out = analyze_fuchsian(payload, config);
  else if (command == "pick") out = pick(payload, config);
  else if (command == "partition") out = partition(payload, config);
  else throw ValidationError("unknown command '" + command + "'");
  require_finite(out.results, "results");
  return out;
}

std::string digest(const json& payload) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : payload.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int handle(const std::string& command, const json& payload, const json* config_file, json& report) {
  const auto start = std::chrono::steady_clock::now();
  report = json::object();
  report["schema_version"] = kSchemaVersion;
  report["tool"] = "interp-lab";
  report["version"] = kToolVersion;
  report["command"] = command;
  report["input_digest"] = digest(payload);

  Config config;
  int code = kExitOk;
  auto fail = [&](const char* kind, const std::string& message, int exit_code) {
    report["error"] = {{"kind", kind}, {"message", message}};
    code = exit_code;
  };
  try {
    if (payload.is_object() && payload.contains("config")) config.merge(payload.at("config"));
    if (config_file != nullptr) config.merge(*config_file);
    Outcome out = execute(command, payload, config);
    report["results"] = std::move(out.results);
    report["warnings"] = std::move(out.warnings);
  } catch (const ValidationError& e) {
    fail("validation", e.what(), kExitValidation);
  } catch (const DomainError& e) {
    fail("domain", e.what(), kExitValidation);
  } catch (const ArgumentError& e) {
    fail("argument", e.what(), kExitValidation);
  } catch (const nlohmann::json::exception& e) {
    fail("validation", e.what(), kExitValidation);
  } catch (const BudgetError& e) {
    fail("budget", e.what(), kExitNumeric);
  } catch (const NumericError& e) {
    fail("numeric", e.what(), kExitNumeric);
  } catch (const std::exception& e) {
    fail("numeric", e.what(), kExitNumeric);
  }
  report["config"] = config.to_json();
  report["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interpolating-sequence diagnostics: Gramians, Pick and Agler feasibility, Fuchsian orbits"};
  app.name("interp-lab");
  app.require_subcommand(1);

  std::string input;
  std::string config_path;
  std::string output_path;
  bool quiet = false;
  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " analysis");
    sub->add_option("input", input, "payload JSON file, or - for standard input")->required();
    sub->add_option("--config", config_path, "JSON file with config overrides");
    sub->add_option("--output", output_path, "write the report here instead of standard output");
    sub->add_flag("--quiet", quiet, "suppress the summary line on standard error");
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "interp-lab: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  json report;
  int code = kExitOk;
  auto io_error = [&](const std::string& message) {
    report = {{"schema_version", kSchemaVersion},
              {"tool", "interp-lab"},
              {"version", kToolVersion},
              {"command", command},
              {"error", {{"kind", "io"}, {"message", message}}}};
    code = kExitValidation;
  };

  json payload;
  json config_json;
  bool have_config = false;
  try {
    if (input == "-") {
      payload = json::parse(std::cin);
    } else {
      std::ifstream in(input);
      if (!in) throw std::runtime_error("cannot read input file '" + input + "'");
      payload = json::parse(in);
    }
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot read config file '" + config_path + "'");
      config_json = json::parse(in);
      have_config = true;
    }
  } catch (const std::exception& e) {
    io_error(e.what());
  }
  if (!report.contains("error")) code = handle(command, payload, have_config ? &config_json : nullptr, report);

  const std::string text = report.dump(2) + "\n";
  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) {
      err << "interp-lab: cannot write '" << output_path << "'\n";
      return kExitValidation;
    }
    file << text;
  } else {
    out << text;
  }
  if (!quiet) {
    err << "interp-lab " << command << ": " << describe_exit(code);
    if (report.contains("error")) err << " (" << report["error"]["message"].get<std::string>() << ")";
    err << "\n";
  }
  return code;
}

} // namespace interp::cli
