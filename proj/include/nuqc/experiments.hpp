#pragma once

// Experiment presets (central values with asymmetric uncertainties) and
// distance scans producing marker curves, optionally with a parameter band.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuqc/markers.hpp"
#include "nuqc/oscillation_models.hpp"

namespace nuqc {

struct Uncertainty {
  double plus = 0.0;
  double minus = 0.0;  // magnitude; the lower value is central - minus
};

/// A published alternative configuration of a preset.
struct PresetVariant {
  std::string name;
  std::string description;
  std::optional<double> energy;   // eV
  std::optional<double> sigma_x;  // m
};

struct ExperimentPreset {
  std::string name;
  std::string label;
  std::string provenance;
  OscillationParams osc;
  Uncertainty sin2_2theta_err;
  Uncertainty delta_m2_err;
  double energy = 0.0;  // eV
  WavePacketParams wp;
  double x_min = 0.0;  // default scan range, meters
  double x_max = 0.0;
  std::vector<PresetVariant> variants;

  /// Throws InvalidArgument on negative uncertainties or invalid parameters.
  void validate() const;

  /// Copy with the named variant's overrides applied. Throws NotFound.
  ExperimentPreset with_variant(std::string_view variant) const;
};

std::vector<std::string> preset_names();

/// Throws NotFound (listing the known names) for an unknown preset.
ExperimentPreset preset(std::string_view name);

enum class Model { PlaneWave, WavePacket };

enum class Spacing { Log, Linear };

std::string to_string(Model model);
std::string to_string(Spacing spacing);
/// Accepts "plane-wave"/"plane_wave" and "wave-packet"/"wave_packet".
Model parse_model(std::string_view text);
Spacing parse_spacing(std::string_view text);

inline constexpr std::size_t kDefaultScanPoints = 2000;

struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t n_points = kDefaultScanPoints;
  Spacing spacing = Spacing::Log;

  static Grid default_for(const ExperimentPreset& preset);

  /// Throws DomainError for n < 2, x_min >= x_max, x_min <= 0 on a log grid
  /// or a negative x_min.
  void validate() const;

  /// Strictly increasing sample positions; endpoints are exact.
  std::vector<double> points() const;
};

struct MarkerPoint {
  double x;
  MarkerValues values;
};

struct Range {
  double lo;
  double hi;

  bool contains(double v) const { return lo <= v && v <= hi; }
};

struct PointBand {
  Range probability;
  Range naqc;
  Range chsh;
};

struct MarkerCurve {
  Model model = Model::PlaneWave;
  std::vector<MarkerPoint> points;
  std::optional<std::vector<PointBand>> band;
};

/// Survival probability of the preset at distance x under the given model.
double survival_probability(const ExperimentPreset& preset, Model model, double x);

MarkerCurve scan(const ExperimentPreset& preset, Model model, const Grid& grid);

/// Scan plus per-point min/max over the 3x3 grid of
/// (sin2_2theta, delta_m2) in {central, +err, -err}.
MarkerCurve uncertainty_band(const ExperimentPreset& preset, Model model, const Grid& grid);

}  // namespace nuqc
