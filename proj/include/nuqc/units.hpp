#pragma once

// Natural units (hbar = c = 1, energies in eV) to SI lengths. Every
// dimensional constant used by the library lives here.

namespace nuqc::units {

/// hbar*c in eV*m (CODATA 2018, 10 significant digits).
inline constexpr double kHbarC = 1.973269804e-7;

/// Length given in eV^-1 to meters.
double natural_length_to_meters(double len_inv_ev);

/// Energy or momentum in eV to the matching wavenumber in m^-1.
double energy_to_wavenumber(double energy_ev);

/// Oscillation phase dm2 * x / (4 hbar c E) for dm2 in eV^2, x in meters,
/// E in eV. The two-flavor survival probability is 1 - s2t * sin^2(phase).
double phase_argument(double delta_m2, double x, double energy);

}  // namespace nuqc::units
