#pragma once

// Command-line front end: `scan`, `validate` and `presets`.
//
// Exit codes: 0 success, 1 failed validation or I/O error, 2 argument or
// config error, 3 numeric-consistency error.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "nuqc/experiments.hpp"

namespace nuqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

enum class Format { Csv, Json };

struct Overrides {
  std::optional<double> energy;       // eV
  std::optional<double> sigma_x;      // m
  std::optional<double> xi;
  std::optional<double> sin2_2theta;
  std::optional<double> delta_m2;     // eV^2
};

/// Everything a scan needs. Unset optionals fall back to the preset.
struct RunConfig {
  std::optional<std::string> experiment;
  std::optional<std::string> variant;
  Model model = Model::WavePacket;
  Overrides overrides;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::size_t n_points = kDefaultScanPoints;
  Spacing spacing = Spacing::Log;
  bool band = false;
  std::optional<std::string> output_path;
  Format format = Format::Csv;
};

/// Reads a JSON config document; unknown keys are rejected. Throws
/// InvalidArgument on schema errors.
RunConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const RunConfig& config);

struct ResolvedRun {
  ExperimentPreset preset;
  Grid grid;
  RunConfig config;  // every optional filled in
};

/// Applies variant and overrides to the preset and fills grid defaults.
ResolvedRun resolve(const RunConfig& config);

/// Full JSON document: resolved config, derived quantities and points.
nlohmann::json scan_document(const ResolvedRun& run, const MarkerCurve& curve);

/// One-line human summary printed after a scan.
std::string summary_line(const ResolvedRun& run);

/// Entry point used by the executable; `out`/`err` replace stdout/stderr.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nuqc::cli
