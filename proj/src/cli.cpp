#include "nuqc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nuqc/errors.hpp"
#include "nuqc/output.hpp"
#include "nuqc/validation.hpp"

namespace nuqc::cli {
namespace {

using nlohmann::json;

std::string format_name(Format f) { return f == Format::Csv ? "csv" : "json"; }

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InvalidArgument("unknown format '" + text + "' (available: csv, json)");
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidArgument("config: unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read_optional(const json& obj, const char* key, std::optional<T>& target) {
  if (!obj.contains(key) || obj.at(key).is_null()) return;
  target = obj.at(key).get<T>();
}

json optional_to_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json optional_to_json(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int print_presets(std::ostream& out) {
  for (const auto& name : preset_names()) {
    const ExperimentPreset p = preset(name);
    out << p.name << " (" << p.label << ")\n"
        << "  sin2_2theta = " << fmt_short(p.osc.sin2_2theta) << " +"
        << fmt_short(p.sin2_2theta_err.plus) << " -" << fmt_short(p.sin2_2theta_err.minus) << "\n"
        << "  delta_m2    = " << fmt_short(p.osc.delta_m2) << " +"
        << fmt_short(p.delta_m2_err.plus) << " -" << fmt_short(p.delta_m2_err.minus) << " eV^2\n"
        << "  energy      = " << fmt_short(p.energy) << " eV\n"
        << "  sigma_x     = " << fmt_short(p.wp.sigma_x) << " m, xi = " << fmt_short(p.wp.xi)
        << "\n"
        << "  x range     = [" << fmt_short(p.x_min) << ", " << fmt_short(p.x_max) << "] m\n"
        << "  source      : " << p.provenance << "\n";
    for (const auto& v : p.variants) {
      out << "  variant " << v.name << ": " << v.description << "\n";
    }
  }
  return kExitOk;
}

int run_validate(std::optional<double> tolerance, std::uint64_t seed, std::ostream& out) {
  ValidationOptions opt;
  opt.tolerance = tolerance;
  opt.seed = seed;
  bool all = true;
  for (const CheckResult& r : run_validation(opt)) {
    all = all && r.passed;
    char line[256];
    std::snprintf(line, sizeof(line), "%s %-20s max_error=%.3e tol=%.1e n=%zu  ",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_error, r.tolerance,
                  r.samples);
    out << line << r.description << "\n";
  }
  out << (all ? "all checks passed" : "validation FAILED") << "\n";
  return all ? kExitOk : kExitFailure;
}

int run_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ResolvedRun resolved = resolve(config);
  const MarkerCurve curve = resolved.config.band
                                ? uncertainty_band(resolved.preset, config.model, resolved.grid)
                                : scan(resolved.preset, config.model, resolved.grid);
  std::string payload;
  if (config.format == Format::Csv) {
    std::ostringstream os;
    output::write_csv(os, curve);
    payload = os.str();
  } else {
    payload = scan_document(resolved, curve).dump(2) + "\n";
  }
  if (config.output_path) {
    output::write_file_atomic(*config.output_path, payload);
    out << summary_line(resolved) << "\n";
  } else {
    out << payload;
    err << summary_line(resolved) << "\n";
  }
  return kExitOk;
}

}  // namespace

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("config: top level must be an object");
  reject_unknown_keys(doc, {"experiment", "variant", "model", "overrides", "grid", "band", "output"},
                      "config");
  RunConfig c;
  try {
    read_optional(doc, "experiment", c.experiment);
    read_optional(doc, "variant", c.variant);
    if (doc.contains("model")) c.model = parse_model(doc.at("model").get<std::string>());
    if (doc.contains("overrides")) {
      const json& o = doc.at("overrides");
      reject_unknown_keys(o, {"energy", "sigma_x", "xi", "sin2_2theta", "delta_m2"}, "overrides");
      read_optional(o, "energy", c.overrides.energy);
      read_optional(o, "sigma_x", c.overrides.sigma_x);
      read_optional(o, "xi", c.overrides.xi);
      read_optional(o, "sin2_2theta", c.overrides.sin2_2theta);
      read_optional(o, "delta_m2", c.overrides.delta_m2);
    }
    if (doc.contains("grid")) {
      const json& g = doc.at("grid");
      reject_unknown_keys(g, {"x_min", "x_max", "n_points", "spacing"}, "grid");
      read_optional(g, "x_min", c.x_min);
      read_optional(g, "x_max", c.x_max);
      if (g.contains("n_points")) c.n_points = g.at("n_points").get<std::size_t>();
      if (g.contains("spacing")) c.spacing = parse_spacing(g.at("spacing").get<std::string>());
    }
    if (doc.contains("band")) c.band = doc.at("band").get<bool>();
    if (doc.contains("output")) {
      const json& o = doc.at("output");
      reject_unknown_keys(o, {"path", "format"}, "output");
      read_optional(o, "path", c.output_path);
      if (o.contains("format")) c.format = parse_format(o.at("format").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return c;
}

json config_to_json(const RunConfig& c) {
  json j;
  j["experiment"] = optional_to_json(c.experiment);
  j["variant"] = optional_to_json(c.variant);
  j["model"] = c.model == Model::PlaneWave ? "plane-wave" : "wave-packet";
  j["overrides"] = {{"energy", optional_to_json(c.overrides.energy)},
                    {"sigma_x", optional_to_json(c.overrides.sigma_x)},
                    {"xi", optional_to_json(c.overrides.xi)},
                    {"sin2_2theta", optional_to_json(c.overrides.sin2_2theta)},
                    {"delta_m2", optional_to_json(c.overrides.delta_m2)}};
  j["grid"] = {{"x_min", optional_to_json(c.x_min)},
               {"x_max", optional_to_json(c.x_max)},
               {"n_points", c.n_points},
               {"spacing", to_string(c.spacing)}};
  j["band"] = c.band;
  j["output"] = {{"path", optional_to_json(c.output_path)}, {"format", format_name(c.format)}};
  return j;
}

ResolvedRun resolve(const RunConfig& config) {
  if (!config.experiment) {
    throw InvalidArgument("no experiment given (available: dayabay, minos)");
  }
  ExperimentPreset p = preset(*config.experiment);
  if (config.variant) p = p.with_variant(*config.variant);
  const Overrides& o = config.overrides;
  if (o.energy) p.energy = *o.energy;
  if (o.sigma_x) p.wp.sigma_x = *o.sigma_x;
  if (o.xi) p.wp.xi = *o.xi;
  if (o.sin2_2theta) p.osc.sin2_2theta = *o.sin2_2theta;
  if (o.delta_m2) p.osc.delta_m2 = *o.delta_m2;
  p.validate();

  Grid grid = Grid::default_for(p);
  if (config.x_min) grid.x_min = *config.x_min;
  if (config.x_max) grid.x_max = *config.x_max;
  grid.n_points = config.n_points;
  grid.spacing = config.spacing;
  grid.validate();

  RunConfig full = config;
  full.overrides = {p.energy, p.wp.sigma_x, p.wp.xi, p.osc.sin2_2theta, p.osc.delta_m2};
  full.x_min = grid.x_min;
  full.x_max = grid.x_max;
  return {std::move(p), grid, std::move(full)};
}

json scan_document(const ResolvedRun& run, const MarkerCurve& curve) {
  const Lengths len = characteristic_lengths(run.preset.osc, run.preset.energy, run.preset.wp);
  const MarkerValues limit =
      MarkerValues::from_probability(survival_probability_decoherent(run.preset.osc));
  const ProbabilityWindow window = naqc_violation_threshold();

  json doc;
  doc["config"] = config_to_json(run.config);
  doc["derived"] = {
      {"l_osc_m", len.l_osc},
      {"l_coh_m", len.l_coh},
      {"naqc_bound", kNaqcBound},
      {"chsh_bound", kChshBound},
      {"naqc_window", {{"p_low", window.low}, {"p_high", window.high}}},
      {"decoherent_limit",
       {{"probability", limit.probability},
        {"naqc", limit.naqc},
        {"chsh", limit.chsh},
        {"naqc_violated", limit.naqc_violated},
        {"chsh_violated", limit.chsh_violated}}},
  };
  json points = json::array();
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const auto& pt = curve.points[i];
    json jp = {{"x_m", pt.x},
               {"probability", pt.values.probability},
               {"naqc", pt.values.naqc},
               {"chsh", pt.values.chsh},
               {"naqc_violated", pt.values.naqc_violated},
               {"chsh_violated", pt.values.chsh_violated}};
    if (curve.band) {
      const PointBand& b = (*curve.band)[i];
      jp["probability_lo"] = b.probability.lo;
      jp["probability_hi"] = b.probability.hi;
      jp["naqc_lo"] = b.naqc.lo;
      jp["naqc_hi"] = b.naqc.hi;
      jp["chsh_lo"] = b.chsh.lo;
      jp["chsh_hi"] = b.chsh.hi;
    }
    points.push_back(std::move(jp));
  }
  doc["model"] = to_string(curve.model);
  doc["points"] = std::move(points);
  return doc;
}

std::string summary_line(const ResolvedRun& run) {
  const Lengths len = characteristic_lengths(run.preset.osc, run.preset.energy, run.preset.wp);
  const MarkerValues limit =
      MarkerValues::from_probability(survival_probability_decoherent(run.preset.osc));
  std::ostringstream os;
  os << run.preset.name << " " << to_string(run.config.model) << ": l_osc="
     << fmt_short(len.l_osc) << " m l_coh=" << fmt_short(len.l_coh) << " m; ";
  if (run.config.model == Model::WavePacket) {
    os << "asymptote P=" << fmt_short(limit.probability);
  } else {
    os << "no damping (wave-packet asymptote P=" << fmt_short(limit.probability) << ")";
  }
  os << " NAQC=" << fmt_short(limit.naqc) << (limit.naqc_violated ? " (> sqrt6)" : " (<= sqrt6)")
     << " CHSH=" << fmt_short(limit.chsh) << (limit.chsh_violated ? " (> 1)" : " (<= 1)");
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantumness markers for two-flavor neutrino oscillations", "nuqc"};
  app.require_subcommand(1);

  auto* scan_cmd = app.add_subcommand("scan", "scan markers over distance and write CSV or JSON");
  std::string config_path;
  std::optional<std::string> experiment, variant, model, spacing, format, out_path;
  std::optional<double> energy, sigma_x, xi, sin2, dm2, x_min, x_max;
  std::optional<std::size_t> points;
  bool band = false;
  scan_cmd->add_option("--config", config_path, "JSON config file; flags override its values")
      ->check(CLI::ExistingFile);
  scan_cmd->add_option("--experiment", experiment, "preset name (dayabay, minos)");
  scan_cmd->add_option("--variant", variant, "published preset variant (see `presets`)");
  scan_cmd->add_option("--model", model, "plane-wave | wave-packet");
  scan_cmd->add_option("--energy", energy, "neutrino energy override [eV]");
  scan_cmd->add_option("--sigma-x", sigma_x, "packet width override [m]");
  scan_cmd->add_option("--xi", xi, "localization factor override");
  scan_cmd->add_option("--sin2-2theta", sin2, "mixing amplitude override");
  scan_cmd->add_option("--delta-m2", dm2, "mass-squared splitting override [eV^2]");
  scan_cmd->add_option("--x-min", x_min, "first distance [m]");
  scan_cmd->add_option("--x-max", x_max, "last distance [m]");
  scan_cmd->add_option("--points", points, "number of grid points");
  scan_cmd->add_option("--spacing", spacing, "log | linear");
  scan_cmd->add_flag("--band", band, "add the parameter-uncertainty band columns");
  scan_cmd->add_option("--format", format, "csv | json");
  scan_cmd->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* validate_cmd = app.add_subcommand("validate", "run the built-in oracle checks");
  std::optional<double> tolerance;
  std::uint64_t seed = ValidationOptions{}.seed;
  validate_cmd->add_option("--tolerance", tolerance, "replace every check's tolerance");
  validate_cmd->add_option("--seed", seed, "seed for the random-phase samples");

  auto* presets_cmd = app.add_subcommand("presets", "list experiment presets and their sources");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (presets_cmd->parsed()) return print_presets(out);
    if (validate_cmd->parsed()) return run_validate(tolerance, seed, out);

    RunConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw InvalidArgument("config " + config_path + ": " + e.what());
      }
      config = config_from_json(doc);
    }
    if (experiment) config.experiment = experiment;
    if (variant) config.variant = variant;
    if (model) config.model = parse_model(*model);
    if (energy) config.overrides.energy = energy;
    if (sigma_x) config.overrides.sigma_x = sigma_x;
    if (xi) config.overrides.xi = xi;
    if (sin2) config.overrides.sin2_2theta = sin2;
    if (dm2) config.overrides.delta_m2 = dm2;
    if (x_min) config.x_min = x_min;
    if (x_max) config.x_max = x_max;
    if (points) config.n_points = *points;
    if (spacing) config.spacing = parse_spacing(*spacing);
    if (band) config.band = true;
    if (format) config.format = parse_format(*format);
    if (out_path) config.output_path = out_path;
    return run_scan(config, out, err);
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << scan_cmd->help();
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n\n" << scan_cmd->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace nuqc::cli
