#pragma once

// Two-flavor oscillation probabilities in the plane-wave and Gaussian
// wave-packet pictures, plus the wave-packet wavefunction itself (closed form
// and numerical momentum integral).
//
// Units at this boundary: energies and momenta in eV, delta_m2 in eV^2,
// distances and widths in meters, times as c*t in meters.

#include <complex>
#include <cstddef>

namespace nuqc {

struct OscillationParams {
  double sin2_2theta = 0.0;  // mixing amplitude, in [0, 1]
  double delta_m2 = 0.0;     // eV^2, signed; |delta_m2| sets lengths

  /// Throws InvalidArgument when outside [0,1] or delta_m2 == 0.
  void validate() const;
  /// Mixing angle theta in [0, pi/4].
  double theta() const;
};

struct WavePacketParams {
  double sigma_x = 1.0;  // effective packet width, meters
  double xi = 0.0;       // effective localization factor

  void validate() const;
};

struct Lengths {
  double l_osc;  // meters
  double l_coh;  // meters
};

/// L_osc = 4 pi E / |dm2| (converted to meters) and
/// L_coh = 4 sqrt2 E^2 sigma_x / |dm2|.
Lengths characteristic_lengths(const OscillationParams& params, double energy,
                               const WavePacketParams& wp);

double oscillation_length(const OscillationParams& params, double energy);

/// 1 - sin^2(2theta) sin^2(dm2 x / 4E).
double survival_probability_pw(const OscillationParams& params, double energy, double x);

struct FlavorAmplitudes {
  std::complex<double> survival;
  std::complex<double> transition;
};

/// Flavor amplitudes from mass-basis evolution with the first mass state's
/// phase factored out: a_surv = cos^2 + sin^2 e^{-2i phase},
/// a_trans = sin cos (1 - e^{-2i phase}).
FlavorAmplitudes plane_wave_amplitudes(const OscillationParams& params, double energy, double x);

/// ln D(x) = -(x / L_coh)^2 - 2 pi^2 xi^2 (sigma_x / L_osc)^2.
double damping_exponent(const OscillationParams& params, const WavePacketParams& wp, double energy,
                        double x);

/// Interference damping factor D(x) in (0, 1].
double damping_factor(const OscillationParams& params, const WavePacketParams& wp, double energy,
                      double x);

/// 1 - sin^2(2theta)/2 * [1 - cos(2 pi x / L_osc) D(x)].
double survival_probability_wp(const OscillationParams& params, const WavePacketParams& wp,
                               double energy, double x);

/// Decoherent limit of the wave-packet survival probability, 1 - sin^2(2theta)/2.
double survival_probability_decoherent(const OscillationParams& params);

/// Mean kinematics of one mass-eigenstate packet.
struct GaussianPacket {
  double momentum;        // p_j, eV
  double energy;          // E_j, eV
  double group_velocity;  // v_j, units of c
  double width;           // production width sigma_x^P, meters
};

/// (2 pi sigma^2)^{-1/4} exp[-i E t + i p x - (x - v t)^2 / (4 sigma^2)].
/// The result is normalized over x in meters (units m^-1/2).
std::complex<double> wavepacket_amplitude_closed(const GaussianPacket& packet, double x, double t);

struct QuadratureOptions {
  double half_width_sigmas = 12.0;  // window in units of sigma_p = 1/(2 sigma_x)
  std::size_t initial_nodes = 2001;
  std::size_t max_nodes = 1u << 20;
  double tolerance = 1e-9;  // Richardson error estimate, relative
};

/// Numerical momentum integral of the Gaussian packet with linearized
/// dispersion E(p) = E_j + v_j (p - p_j), by composite Simpson on q = p - p_j
/// with node doubling. Throws AccuracyError if the momentum window reaches
/// p <= 0 (packet not sharply peaked) or the estimate does not converge.
std::complex<double> wavepacket_amplitude_quadrature(const GaussianPacket& packet, double x,
                                                     double t,
                                                     const QuadratureOptions& options = {});

}  // namespace nuqc
