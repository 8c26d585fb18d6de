#include "nuqc/oscillation_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "nuqc/errors.hpp"
#include "nuqc/units.hpp"

namespace nuqc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClampSlack = 1e-14;

void require_energy(double energy, const char* where) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw DomainError(std::string(where) + ": energy must be positive");
  }
}

void require_distance(double x, const char* where) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(where) + ": distance must be non-negative");
  }
}

// Rounding may push a probability a hair outside [0,1]; anything larger is a bug.
double checked_probability(double p, const char* where) {
  if (!std::isfinite(p) || p < -kClampSlack || p > 1.0 + kClampSlack) {
    std::ostringstream os;
    os << where << ": probability " << p << " outside [0,1]";
    throw InternalConsistency(os.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

void OscillationParams::validate() const {
  if (!(sin2_2theta >= 0.0 && sin2_2theta <= 1.0)) {
    throw InvalidArgument("sin2_2theta must lie in [0,1], got " + std::to_string(sin2_2theta));
  }
  if (delta_m2 == 0.0 || !std::isfinite(delta_m2)) {
    throw InvalidArgument("delta_m2 must be finite and non-zero");
  }
}

double OscillationParams::theta() const { return 0.5 * std::asin(std::sqrt(sin2_2theta)); }

void WavePacketParams::validate() const {
  if (!(sigma_x > 0.0) || !std::isfinite(sigma_x)) {
    throw InvalidArgument("sigma_x must be positive, got " + std::to_string(sigma_x));
  }
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw InvalidArgument("xi must be non-negative, got " + std::to_string(xi));
  }
}

double oscillation_length(const OscillationParams& params, double energy) {
  params.validate();
  require_energy(energy, "oscillation_length");
  return units::natural_length_to_meters(4.0 * kPi * energy / std::abs(params.delta_m2));
}

Lengths characteristic_lengths(const OscillationParams& params, double energy,
                               const WavePacketParams& wp) {
  wp.validate();
  const double l_osc = oscillation_length(params, energy);
  // E^2 / dm2 is dimensionless, so sigma_x carries the length.
  const double l_coh =
      4.0 * std::numbers::sqrt2 * energy * energy / std::abs(params.delta_m2) * wp.sigma_x;
  return {l_osc, l_coh};
}

double survival_probability_pw(const OscillationParams& params, double energy, double x) {
  params.validate();
  const double phase = units::phase_argument(params.delta_m2, x, energy);
  const double s = std::sin(phase);
  return checked_probability(1.0 - params.sin2_2theta * s * s, "survival_probability_pw");
}

FlavorAmplitudes plane_wave_amplitudes(const OscillationParams& params, double energy, double x) {
  params.validate();
  const double phase = units::phase_argument(params.delta_m2, x, energy);
  const double th = params.theta();
  const double c = std::cos(th);
  const double s = std::sin(th);
  const std::complex<double> rot = std::polar(1.0, -2.0 * phase);
  return {c * c + s * s * rot, s * c * (1.0 - rot)};
}

double damping_exponent(const OscillationParams& params, const WavePacketParams& wp, double energy,
                        double x) {
  require_distance(x, "damping_exponent");
  const Lengths len = characteristic_lengths(params, energy, wp);
  const double r = x / len.l_coh;
  const double loc = wp.sigma_x / len.l_osc;
  return -r * r - 2.0 * kPi * kPi * wp.xi * wp.xi * loc * loc;
}

double damping_factor(const OscillationParams& params, const WavePacketParams& wp, double energy,
                      double x) {
  return std::exp(damping_exponent(params, wp, energy, x));
}

double survival_probability_wp(const OscillationParams& params, const WavePacketParams& wp,
                               double energy, double x) {
  const double log_d = damping_exponent(params, wp, energy, x);
  const double phase = units::phase_argument(params.delta_m2, x, energy);
  // 1 - s2t/2 [1 - cos(2 phase) D] rewritten as the plane-wave value minus a
  // term proportional to 1 - D; 2 pi x / L_osc == 2 phase. With D == 1 this is
  // bit-identical to survival_probability_pw.
  const double s = std::sin(phase);
  const double plane = 1.0 - params.sin2_2theta * s * s;
  const double one_minus_d = -std::expm1(log_d);
  const double correction = 0.5 * params.sin2_2theta * std::cos(2.0 * phase) * one_minus_d;
  return checked_probability(plane - correction, "survival_probability_wp");
}

double survival_probability_decoherent(const OscillationParams& params) {
  params.validate();
  return 1.0 - 0.5 * params.sin2_2theta;
}

std::complex<double> wavepacket_amplitude_closed(const GaussianPacket& packet, double x, double t) {
  if (!(packet.width > 0.0) || !std::isfinite(packet.width)) {
    throw DomainError("wavepacket_amplitude_closed: width must be positive");
  }
  const double sigma2 = packet.width * packet.width;
  const double d = x - packet.group_velocity * t;
  const double norm = std::pow(2.0 * kPi * sigma2, -0.25);
  const double carrier = (packet.momentum * x - packet.energy * t) / units::kHbarC;
  return norm * std::exp(-d * d / (4.0 * sigma2)) * std::polar(1.0, carrier);
}

namespace {

// Composite Simpson over [-half, half] with `intervals` (even) subintervals.
template <typename F>
std::complex<double> simpson(F&& f, double half, std::size_t intervals) {
  const double h = 2.0 * half / static_cast<double>(intervals);
  std::complex<double> sum = f(-half) + f(half);
  for (std::size_t i = 1; i < intervals; ++i) {
    const double q = -half + h * static_cast<double>(i);
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(q);
  }
  return sum * (h / 3.0);
}

}  // namespace

std::complex<double> wavepacket_amplitude_quadrature(const GaussianPacket& packet, double x,
                                                     double t, const QuadratureOptions& options) {
  if (!(packet.width > 0.0) || !std::isfinite(packet.width)) {
    throw DomainError("wavepacket_amplitude_quadrature: width must be positive");
  }
  if (!(packet.momentum > 0.0)) {
    throw DomainError("wavepacket_amplitude_quadrature: mean momentum must be positive");
  }
  if (options.initial_nodes < 3) {
    throw InvalidArgument("wavepacket_amplitude_quadrature: need at least 3 nodes");
  }

  // Work in wavenumbers (m^-1) so x and t stay in meters.
  const double k_mean = units::energy_to_wavenumber(packet.momentum);
  const double sigma_k = 1.0 / (2.0 * packet.width);
  const double half = options.half_width_sigmas * sigma_k;
  if (k_mean - half <= 0.0) {
    std::ostringstream os;
    os << "wavepacket_amplitude_quadrature: width " << packet.width
       << " m too small, momentum window reaches p <= 0";
    throw AccuracyError(os.str());
  }

  const double d = x - packet.group_velocity * t;
  const double norm = std::pow(2.0 * kPi * sigma_k * sigma_k, -0.25);
  auto integrand = [&](double q) {
    return norm * std::exp(-q * q / (4.0 * sigma_k * sigma_k)) * std::polar(1.0, q * d);
  };

  std::size_t intervals = options.initial_nodes - 1;
  if (intervals % 2 == 1) ++intervals;
  std::complex<double> coarse = simpson(integrand, half, intervals);
  while (true) {
    intervals *= 2;
    if (intervals + 1 > options.max_nodes) {
      throw AccuracyError("wavepacket_amplitude_quadrature: no convergence within node budget");
    }
    const std::complex<double> fine = simpson(integrand, half, intervals);
    const double estimate = std::abs(fine - coarse) / 15.0;
    const double scale = std::abs(fine);
    if (scale > 0.0 && estimate <= options.tolerance * scale) {
      const double carrier = (packet.momentum * x - packet.energy * t) / units::kHbarC;
      return fine / std::sqrt(2.0 * kPi) * std::polar(1.0, carrier);
    }
    coarse = fine;
  }
}

}  // namespace nuqc
