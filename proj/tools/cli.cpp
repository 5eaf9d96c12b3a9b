#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "nnsdist/catalog.hpp"
#include "nnsdist/channel.hpp"
#include "nnsdist/errors.hpp"
#include "nnsdist/feasibility.hpp"
#include "nnsdist/json_io.hpp"
#include "nnsdist/version.hpp"

namespace nnsdist::cli {

namespace {

using json_io::json;

const std::vector<std::string> kCommands = {"build",     "verify-catalog", "feasibility", "sweep",
                                            "threshold", "necessity",      "realize"};

struct Settings {
  FeasibilityOptions feasibility;
  CatalogTolerances catalog;
  double kraus = 1e-10;
  double span_rank = 1e-9;
};

Settings settings_from(const RunConfig& config) {
  auto tol = default_tolerances();
  for (const auto& [name, value] : config.tolerances) tol[name] = value;
  Settings s;
  s.feasibility.phase1_tol = tol.at("phase1");
  s.feasibility.residual_tol = tol.at("witness_residual");
  s.feasibility.margin_tol = tol.at("margin");
  s.feasibility.nonneg_tol = tol.at("nonneg");
  s.feasibility.simplex.pivot_tol = tol.at("pivot");
  s.catalog.residual = tol.at("catalog_residual");
  s.catalog.nonneg = tol.at("catalog_nonneg");
  s.kraus = tol.at("kraus");
  s.span_rank = tol.at("span_rank");
  return s;
}

json header(const RunConfig& config) {
  auto tol = default_tolerances();
  for (const auto& [name, value] : config.tolerances) tol[name] = value;
  json j;
  j["tool"] = "nnsdist";
  j["version"] = std::string(kVersion);
  j["schema_version"] = json_io::kSchemaVersion;
  j["command"] = config.command;
  json t = json::object();
  for (const auto& [name, value] : tol) t[name] = value;
  j["tolerances"] = std::move(t);
  return j;
}

json with_header(const RunConfig& config, const json& body) {
  json j = header(config);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::string csv_header(const RunConfig& config) {
  std::ostringstream os;
  os << "# nnsdist " << kVersion << " " << config.command << " n=" << config.n << "\n";
  os << "# tolerances:";
  auto tol = default_tolerances();
  for (const auto& [name, value] : config.tolerances) tol[name] = value;
  for (const auto& [name, value] : tol) os << " " << name << "=" << json_io::format_double(value);
  os << "\nalpha,n,outcome,metric\n";
  return os.str();
}

std::string probes_csv(const RunConfig& config, const std::vector<Probe>& probes) {
  std::string text = csv_header(config);
  for (const auto& p : probes) {
    text += json_io::format_double(p.alpha) + "," + std::to_string(config.n) + "," +
            std::string(outcome_name(p.kind)) + "," + json_io::format_double(p.metric) + "\n";
  }
  return text;
}

struct Report {
  std::string text;
  int status = kExitOk;
};

Report json_report(const json& j, int status) { return {j.dump(2) + "\n", status}; }

Report cmd_build(const RunConfig& config) {
  if (!config.alpha) throw InvalidArgument("build needs --alpha or --pi-frac");
  const PhaseAngle alpha(*config.alpha);
  const MatrixForm form = config.form == "original" ? MatrixForm::Original : MatrixForm::Reduced;
  ComplexMatrix m;
  if (config.emit == "A") {
    m = a_alpha(alpha, form);
  } else if (config.emit == "A-kron") {
    m = kron_power(a_alpha(alpha, form), config.n);
  } else if (config.emit == "Q") {
    m = build_Q(config.n);
  } else if (config.emit == "B") {
    m = build_B(alpha, config.n);
  } else if (config.emit == "C") {
    m = build_C(alpha, config.n);
  } else {
    m = build_C_block(alpha, config.n);
  }
  json body;
  body["n"] = config.n;
  body["alpha"] = alpha.radians();
  body["emit"] = config.emit;
  if (config.emit == "A" || config.emit == "A-kron") body["form"] = config.form;
  body["matrix"] = json_io::to_json(m);
  return json_report(with_header(config, body), kExitOk);
}

Report cmd_verify_catalog(const RunConfig& config, const Settings& s) {
  std::vector<double> alphas;
  if (config.alpha) {
    alphas.push_back(*config.alpha);
  } else {
    alphas = catalog_samples(config.n, config.samples);
  }
  json arr = json::array();
  int status = kExitOk;
  for (double a : alphas) {
    const VerificationReport r = verify_catalog_entry(config.n, PhaseAngle(a), s.catalog);
    if (!r.passed) status = kExitVerificationFailed;
    arr.push_back(with_header(config, json_io::to_json(r)));
  }
  return json_report(arr, status);
}

Report cmd_feasibility(const RunConfig& config, const Settings& s) {
  if (!config.alpha) throw InvalidArgument("feasibility needs --alpha or --pi-frac");
  const PhaseAngle alpha(*config.alpha);
  try {
    const FeasibilityOutcome outcome = nns_exists(alpha, config.n, s.feasibility);
    return json_report(with_header(config, json_io::to_json(outcome, alpha, config.n)), kExitOk);
  } catch (const NumericalIndeterminate& e) {
    json body;
    body["order"] = config.n;
    body["alpha"] = alpha.radians();
    body["outcome"] = "indeterminate";
    body["phase_one_objective"] = e.phase_one_objective();
    body["best_residual"] = e.best_residual();
    body["best_margin"] = e.best_margin();
    return json_report(with_header(config, body), kExitIndeterminate);
  }
}

Report cmd_sweep(const RunConfig& config, const Settings& s) {
  const std::vector<Probe> probes = sweep(config.n, config.points, s.feasibility);
  if (config.format == "csv") return {probes_csv(config, probes), kExitOk};
  json pts = json::array();
  for (const auto& p : probes) pts.push_back(json_io::to_json(p));
  json body;
  body["order"] = config.n;
  body["points"] = std::move(pts);
  return json_report(with_header(config, body), kExitOk);
}

Report cmd_threshold(const RunConfig& config, const Settings& s) {
  const ThresholdEstimate t = threshold_bisect(config.n, config.tol, s.feasibility);
  json body = json_io::to_json(t);
  body["tol"] = config.tol;
  return json_report(with_header(config, body), kExitOk);
}

Report cmd_necessity(const RunConfig& config, const Settings& s) {
  const std::vector<double> grid = necessity_grid(config.n, config.points);
  const NecessityReport r = necessity_scan(config.n, grid, s.feasibility);
  const int status = r.anomalies.empty() ? kExitOk : kExitVerificationFailed;
  if (config.format == "csv") return {probes_csv(config, r.points), status};
  return json_report(with_header(config, json_io::to_json(r)), status);
}

Report cmd_realize(const RunConfig& config, const Settings& s) {
  std::vector<ComplexMatrix> t;
  if (!config.input.empty()) {
    std::ifstream in(config.input);
    if (!in) throw InvalidArgument("cannot open input file " + config.input);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InvalidArgument(std::string("input is not valid JSON: ") + e.what());
    }
    t = json_io::span_set_from_json(j);
  } else {
    t = random_span_set(*config.seed, config.max_n, config.max_count);
  }
  const SpanSet span = extract_basis(t);
  const KrausPair pair = realize_channels(span);
  const KrausCheck ce = verify_kraus(pair.e, s.kraus);
  const KrausCheck cf = verify_kraus(pair.f, s.kraus);
  const bool equal = span_equality(pair.e, pair.f, span.matrices, s.span_rank);

  json verification;
  verification["kraus_defect_E"] = ce.defect;
  verification["kraus_defect_F"] = cf.defect;
  verification["kraus_E_passed"] = ce.passed;
  verification["kraus_F_passed"] = cf.passed;
  verification["span_dimension"] = span.dimension();
  verification["product_span_dimension"] = product_span_dimension(pair.e, pair.f, s.span_rank);
  verification["span_equal"] = equal;
  const bool passed = ce.passed && cf.passed && equal;
  verification["passed"] = passed;

  json body;
  if (config.seed) body["seed"] = *config.seed;
  body["basis_indices"] = span.basis_indices;
  body["verification"] = std::move(verification);
  body["kraus"] = json_io::to_json(pair);
  return json_report(with_header(config, body), passed ? kExitOk : kExitVerificationFailed);
}

Report dispatch(const RunConfig& config) {
  const Settings s = settings_from(config);
  if (config.command == "build") return cmd_build(config);
  if (config.command == "verify-catalog") return cmd_verify_catalog(config, s);
  if (config.command == "feasibility") return cmd_feasibility(config, s);
  if (config.command == "sweep") return cmd_sweep(config, s);
  if (config.command == "threshold") return cmd_threshold(config, s);
  if (config.command == "necessity") return cmd_necessity(config, s);
  return cmd_realize(config, s);
}

std::filesystem::path output_path(const std::string& output) {
  std::filesystem::path p(output);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("NNSDIST_OUTPUT_DIR"); dir && *dir) {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

double parse_pi_fraction(const std::string& text) {
  const auto slash = text.find('/');
  long num = 0;
  long den = 1;
  auto parse = [&](std::string_view part, long& value) {
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    return ec == std::errc{} && end == part.data() + part.size() && !part.empty();
  };
  const std::string_view sv(text);
  const bool ok = slash == std::string::npos
                      ? parse(sv, num)
                      : parse(sv.substr(0, slash), num) && parse(sv.substr(slash + 1), den);
  if (!ok || den == 0) throw InvalidArgument("--pi-frac expects a/b with integers a, b != 0");
  return PhaseAngle::from_pi_fraction(num, den).radians();
}

}  // namespace

std::map<std::string, double> default_tolerances() {
  const FeasibilityOptions f;
  const CatalogTolerances c;
  return {
      {"catalog_nonneg", c.nonneg},
      {"catalog_residual", c.residual},
      {"kraus", 1e-10},
      {"margin", f.margin_tol},
      {"nonneg", f.nonneg_tol},
      {"phase1", f.phase1_tol},
      {"pivot", f.simplex.pivot_tol},
      {"span_rank", 1e-9},
      {"witness_residual", f.residual_tol},
  };
}

void validate(const RunConfig& config) {
  if (!contains(kCommands, config.command)) {
    throw InvalidArgument("unknown command '" + config.command + "'");
  }
  const bool needs_n = config.command != "realize" &&
                       !(config.command == "build" && config.emit == "A");
  if (needs_n && config.n < 1) throw InvalidArgument("--n must be >= 1");
  if (config.format != "json" && config.format != "csv") {
    throw InvalidArgument("--format must be json or csv");
  }
  if (config.format == "csv" && config.command != "sweep" && config.command != "necessity") {
    throw InvalidArgument("--format csv is only available for sweep and necessity");
  }
  const auto known = default_tolerances();
  for (const auto& [name, value] : config.tolerances) {
    if (!known.contains(name)) throw InvalidArgument("unknown tolerance '" + name + "'");
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw InvalidArgument("tolerance '" + name + "' must be positive");
    }
  }
  if (config.alpha && !std::isfinite(*config.alpha)) throw InvalidArgument("--alpha must be finite");
  if (config.samples < 1) throw InvalidArgument("--samples must be >= 1");
  if (config.points < 1) throw InvalidArgument("--points must be >= 1");
  if (!(config.tol > 0.0)) throw InvalidArgument("--tol must be positive");
  if (config.command == "build") {
    static const std::vector<std::string> emits = {"A", "A-kron", "Q", "B", "C", "C-block"};
    if (!contains(emits, config.emit)) {
      throw InvalidArgument("--emit must be one of A, A-kron, Q, B, C, C-block");
    }
    if (config.form != "original" && config.form != "reduced") {
      throw InvalidArgument("--form must be original or reduced");
    }
  }
  if (config.command == "realize") {
    if (config.input.empty() == !config.seed.has_value()) {
      throw InvalidArgument("realize needs exactly one of --input or --seed");
    }
    if (config.max_n < 1 || config.max_count < 1) {
      throw InvalidArgument("--max-n and --max-count must be >= 1");
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    validate(config);
    report = dispatch(config);
  } catch (const NumericalIndeterminate& e) {
    err << "nnsdist: indeterminate: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const NonMonotonePredicate& e) {
    err << "nnsdist: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "nnsdist: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.output.empty()) {
    out << report.text;
  } else {
    const auto path = output_path(config.output);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "nnsdist: cannot write " << path.string() << "\n";
      return kExitUsage;
    }
    file << report.text;
  }
  return report.status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry-reduced tensor systems, nonnegative solutions and channel realizations",
               "nnsdist"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig config;
  std::optional<double> alpha;
  std::string pi_frac;
  std::vector<std::string> tolerance_args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance_args, "Override a tolerance, name=value (repeatable)");
    sub->add_option("-o,--output", config.output, "Write the report here instead of stdout");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", config.n, "Tensor order N")->required(); };
  auto add_alpha = [&](CLI::App* sub, bool required) {
    auto* a = sub->add_option("--alpha", alpha, "Angle in radians");
    auto* p = sub->add_option("--pi-frac", pi_frac, "Angle as a/b, meaning pi*a/b");
    a->excludes(p);
    p->excludes(a);
    if (required) {
      sub->callback([&, sub] {
        if (sub->count("--alpha") + sub->count("--pi-frac") == 0) {
          throw CLI::RequiredError("--alpha or --pi-frac");
        }
      });
    }
  };

  auto* build = app.add_subcommand("build", "Emit A, A^{⊗N}, Q_N, B, C or the block form of C");
  build->add_option("--n", config.n, "Tensor order N");
  add_alpha(build, true);
  build->add_option("--emit", config.emit, "A | A-kron | Q | B | C | C-block");
  build->add_option("--form", config.form, "original | reduced (for A, A-kron)");
  add_common(build);

  auto* verify = app.add_subcommand("verify-catalog", "Verify the explicit solution for order N");
  add_n(verify);
  verify->add_option("--samples", config.samples, "Number of alpha samples in the interval");
  add_alpha(verify, false);
  add_common(verify);

  auto* feas = app.add_subcommand("feasibility", "Decide existence with a witness or certificate");
  add_n(feas);
  add_alpha(feas, true);
  add_common(feas);

  auto* sweep_cmd = app.add_subcommand("sweep", "Probe evenly spaced alphas over [pi/2, pi]");
  add_n(sweep_cmd);
  sweep_cmd->add_option("--points", config.points, "Number of grid points");
  sweep_cmd->add_option("--format", config.format, "json | csv");
  add_common(sweep_cmd);

  auto* threshold = app.add_subcommand("threshold", "Bisect for the feasibility threshold");
  add_n(threshold);
  threshold->add_option("--tol", config.tol, "Bracket width in radians");
  add_common(threshold);

  auto* necessity = app.add_subcommand("necessity", "Certify infeasibility below the threshold");
  add_n(necessity);
  necessity->add_option("--points", config.points, "Number of grid points");
  necessity->add_option("--format", config.format, "json | csv");
  add_common(necessity);

  auto* realize = app.add_subcommand("realize", "Build two channels whose products span T");
  realize->add_option("--input", config.input, "JSON file with the matrices of T");
  realize->add_option("--seed", config.seed, "Generate a random T from this seed");
  realize->add_option("--max-n", config.max_n, "Largest matrix size for --seed");
  realize->add_option("--max-count", config.max_count, "Largest |T| for --seed");
  add_common(realize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  try {
    if (alpha) config.alpha = alpha;
    if (!pi_frac.empty()) config.alpha = parse_pi_fraction(pi_frac);
    for (const auto& arg : tolerance_args) {
      const auto eq = arg.find('=');
      if (eq == std::string::npos) throw InvalidArgument("--tolerance expects name=value");
      double value = 0.0;
      const char* begin = arg.data() + eq + 1;
      const char* end = arg.data() + arg.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc{} || ptr != end) {
        throw InvalidArgument("--tolerance value for '" + arg.substr(0, eq) + "' is not a number");
      }
      config.tolerances[arg.substr(0, eq)] = value;
    }
  } catch (const Error& e) {
    err << "nnsdist: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace nnsdist::cli
