#include "nuqc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nuqc/errors.hpp"

namespace nuqc {
namespace {

ExperimentPreset dayabay() {
  ExperimentPreset p;
  p.name = "dayabay";
  p.label = "Daya Bay";
  p.provenance =
      "Daya Bay reactor anti-nu_e disappearance: sin^2(2 theta_13) = 0.084 +/- 0.005, "
      "dm2_ee = 2.42 (+0.10 -0.11) x 10^-3 eV^2, E = 2 MeV; packet width sigma_x = 1.25e-6 m, "
      "xi = 0";
  p.osc = {0.084, 2.42e-3};
  p.sin2_2theta_err = {0.005, 0.005};
  p.delta_m2_err = {0.10e-3, 0.11e-3};
  p.energy = 2e6;
  p.wp = {1.25e-6, 0.0};
  p.x_min = 1e2;
  p.x_max = 1e12;
  p.variants = {
      {"energy-4mev", "E = 4 MeV with sigma_x = 1.25e-6 m (wave-packet vs plane-wave comparison)",
       4e6, std::nullopt},
      {"sigma-3.3um", "E = 2 MeV with sigma_x = 3.3e-6 m (survival probability curve)",
       std::nullopt, 3.3e-6},
      {"sigma-1.7um", "E = 2 MeV with sigma_x = 1.7e-6 m (packet-width comparison)", std::nullopt,
       1.7e-6},
      {"sigma-2.5um", "E = 2 MeV with sigma_x = 2.5e-6 m (packet-width comparison)", std::nullopt,
       2.5e-6},
      {"sigma-5um", "E = 2 MeV with sigma_x = 5e-6 m (packet-width comparison)", std::nullopt,
       5e-6},
  };
  return p;
}

ExperimentPreset minos() {
  ExperimentPreset p;
  p.name = "minos";
  p.label = "MINOS";
  p.provenance =
      "MINOS accelerator nu_mu disappearance: sin^2(2 theta_23) = 0.95 (+0.035 -0.036), "
      "dm2_32 = 2.32 (+0.12 -0.08) x 10^-3 eV^2, E = 0.5 GeV; packet width sigma_x = 7e-9 m, "
      "xi = 0";
  p.osc = {0.95, 2.32e-3};
  p.sin2_2theta_err = {0.035, 0.036};
  p.delta_m2_err = {0.12e-3, 0.08e-3};
  p.energy = 5e8;
  p.wp = {7e-9, 0.0};
  p.x_min = 1e3;
  p.x_max = 1e14;
  return p;
}

std::string join_names() {
  std::string out;
  for (const auto& n : preset_names()) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

MarkerValues evaluate(const OscillationParams& osc, const WavePacketParams& wp, double energy,
                      Model model, double x) {
  const double p = model == Model::PlaneWave ? survival_probability_pw(osc, energy, x)
                                             : survival_probability_wp(osc, wp, energy, x);
  return MarkerValues::from_probability(p);
}

}  // namespace

void ExperimentPreset::validate() const {
  osc.validate();
  wp.validate();
  for (double u : {sin2_2theta_err.plus, sin2_2theta_err.minus, delta_m2_err.plus,
                   delta_m2_err.minus}) {
    if (!(u >= 0.0) || !std::isfinite(u)) {
      throw InvalidArgument("preset " + name + ": uncertainties must be non-negative");
    }
  }
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw InvalidArgument("preset " + name + ": energy must be positive");
  }
  if (!(x_min > 0.0 && x_min < x_max)) {
    throw InvalidArgument("preset " + name + ": default range needs 0 < x_min < x_max");
  }
}

ExperimentPreset ExperimentPreset::with_variant(std::string_view variant) const {
  for (const auto& v : variants) {
    if (v.name != variant) continue;
    ExperimentPreset out = *this;
    if (v.energy) out.energy = *v.energy;
    if (v.sigma_x) out.wp.sigma_x = *v.sigma_x;
    return out;
  }
  std::string known;
  for (const auto& v : variants) known += (known.empty() ? "" : ", ") + v.name;
  throw NotFound("unknown variant '" + std::string(variant) + "' for preset " + name +
                 " (available: " + (known.empty() ? "none" : known) + ")");
}

std::vector<std::string> preset_names() { return {"dayabay", "minos"}; }

ExperimentPreset preset(std::string_view name) {
  if (name == "dayabay") return dayabay();
  if (name == "minos") return minos();
  throw NotFound("unknown experiment '" + std::string(name) + "' (available: " + join_names() +
                 ")");
}

std::string to_string(Model model) {
  return model == Model::PlaneWave ? "plane_wave" : "wave_packet";
}

std::string to_string(Spacing spacing) { return spacing == Spacing::Log ? "log" : "linear"; }

Model parse_model(std::string_view text) {
  if (text == "plane-wave" || text == "plane_wave") return Model::PlaneWave;
  if (text == "wave-packet" || text == "wave_packet") return Model::WavePacket;
  throw InvalidArgument("unknown model '" + std::string(text) +
                        "' (available: plane-wave, wave-packet)");
}

Spacing parse_spacing(std::string_view text) {
  if (text == "log") return Spacing::Log;
  if (text == "linear") return Spacing::Linear;
  throw InvalidArgument("unknown spacing '" + std::string(text) + "' (available: log, linear)");
}

Grid Grid::default_for(const ExperimentPreset& preset) {
  return {preset.x_min, preset.x_max, kDefaultScanPoints, Spacing::Log};
}

void Grid::validate() const {
  if (n_points < 2) throw DomainError("grid needs at least 2 points");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw DomainError("grid needs x_min < x_max");
  }
  if (x_min < 0.0) throw DomainError("grid distances must be non-negative");
  if (spacing == Spacing::Log && !(x_min > 0.0)) {
    throw DomainError("log grid needs x_min > 0");
  }
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> xs(n_points);
  const double last = static_cast<double>(n_points - 1);
  if (spacing == Spacing::Log) {
    const double a = std::log(x_min);
    const double b = std::log(x_max);
    for (std::size_t i = 0; i < n_points; ++i) {
      xs[i] = std::exp(a + (b - a) * (static_cast<double>(i) / last));
    }
  } else {
    for (std::size_t i = 0; i < n_points; ++i) {
      xs[i] = x_min + (x_max - x_min) * (static_cast<double>(i) / last);
    }
  }
  xs.front() = x_min;
  xs.back() = x_max;
  for (std::size_t i = 1; i < n_points; ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw DomainError("grid too dense to be strictly increasing in double precision");
    }
  }
  return xs;
}

double survival_probability(const ExperimentPreset& preset, Model model, double x) {
  return evaluate(preset.osc, preset.wp, preset.energy, model, x).probability;
}

MarkerCurve scan(const ExperimentPreset& preset, Model model, const Grid& grid) {
  preset.validate();
  const std::vector<double> xs = grid.points();
  MarkerCurve curve;
  curve.model = model;
  curve.points.reserve(xs.size());
  for (double x : xs) {
    curve.points.push_back({x, evaluate(preset.osc, preset.wp, preset.energy, model, x)});
  }
  return curve;
}

MarkerCurve uncertainty_band(const ExperimentPreset& preset, Model model, const Grid& grid) {
  MarkerCurve curve = scan(preset, model, grid);

  const double s0 = preset.osc.sin2_2theta;
  const double m0 = preset.osc.delta_m2;
  // sin^2(2 theta) is clamped to its physical range at the corners.
  const double s_values[] = {s0, std::min(1.0, s0 + preset.sin2_2theta_err.plus),
                             std::max(0.0, s0 - preset.sin2_2theta_err.minus)};
  const double m_values[] = {m0, m0 + preset.delta_m2_err.plus, m0 - preset.delta_m2_err.minus};

  std::vector<PointBand> band;
  band.reserve(curve.points.size());
  for (const auto& pt : curve.points) {
    const MarkerValues& v = pt.values;
    band.push_back({{v.probability, v.probability}, {v.naqc, v.naqc}, {v.chsh, v.chsh}});
  }

  for (double s : s_values) {
    for (double m : m_values) {
      const OscillationParams corner{s, m};
      corner.validate();
      for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const MarkerValues v = evaluate(corner, preset.wp, preset.energy, model, curve.points[i].x);
        PointBand& b = band[i];
        b.probability = {std::min(b.probability.lo, v.probability),
                         std::max(b.probability.hi, v.probability)};
        b.naqc = {std::min(b.naqc.lo, v.naqc), std::max(b.naqc.hi, v.naqc)};
        b.chsh = {std::min(b.chsh.lo, v.chsh), std::max(b.chsh.hi, v.chsh)};
      }
    }
  }
  curve.band = std::move(band);
  return curve;
}

}  // namespace nuqc
