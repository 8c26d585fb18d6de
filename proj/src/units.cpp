#include "nuqc/units.hpp"

#include <cmath>
#include <string>

#include "nuqc/errors.hpp"

namespace nuqc::units {

double natural_length_to_meters(double len_inv_ev) {
  if (!std::isfinite(len_inv_ev)) {
    throw InvalidArgument("natural_length_to_meters: non-finite length");
  }
  return len_inv_ev * kHbarC;
}

double energy_to_wavenumber(double energy_ev) {
  if (!std::isfinite(energy_ev)) {
    throw InvalidArgument("energy_to_wavenumber: non-finite energy");
  }
  return energy_ev / kHbarC;
}

double phase_argument(double delta_m2, double x, double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw DomainError("phase_argument: energy must be positive, got " + std::to_string(energy));
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("phase_argument: distance must be non-negative, got " + std::to_string(x));
  }
  if (!std::isfinite(delta_m2)) {
    throw InvalidArgument("phase_argument: non-finite delta_m2");
  }
  return delta_m2 * x / (4.0 * kHbarC * energy);
}

}  // namespace nuqc::units
