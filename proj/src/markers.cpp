#include "nuqc/markers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nuqc/errors.hpp"

namespace nuqc {
namespace {

constexpr double kProbabilitySlack = 1e-14;
constexpr double kNormTolerance = 1e-10;

double clamp_probability(double p, const char* where) {
  if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack)) {
    throw DomainError(std::string(where) + ": probability " + std::to_string(p) +
                      " outside [0,1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double naqc_from_probability(double p) {
  p = clamp_probability(p, "naqc_from_probability");
  return 2.0 + 2.0 * std::sqrt(p * (1.0 - p));
}

double chsh_from_probability(double p) {
  p = clamp_probability(p, "chsh_from_probability");
  return 1.0 + 4.0 * p * (1.0 - p);
}

MarkerValues MarkerValues::from_probability(double p) {
  MarkerValues v;
  v.probability = clamp_probability(p, "MarkerValues");
  v.naqc = naqc_from_probability(v.probability);
  v.chsh = chsh_from_probability(v.probability);
  v.naqc_violated = v.naqc > kNaqcBound;
  v.chsh_violated = v.chsh > kChshBound;
  return v;
}

TwoQubitState flavor_density_matrix(std::complex<double> a_surv, std::complex<double> a_trans) {
  const double norm = std::norm(a_surv) + std::norm(a_trans);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw InvalidAmplitudes("flavor_density_matrix: |a_surv|^2 + |a_trans|^2 = " +
                            std::to_string(norm));
  }
  Matrix4c m = Matrix4c::Zero();
  m(1, 1) = std::norm(a_trans);
  m(1, 2) = a_trans * std::conj(a_surv);
  m(2, 1) = a_surv * std::conj(a_trans);
  m(2, 2) = std::norm(a_surv);
  return TwoQubitState(m / norm);
}

ProbabilityWindow naqc_violation_threshold() {
  // p (1 - p) = c with c = ((sqrt6 - 2) / 2)^2.
  const double half_gap = 0.5 * (kNaqcBound - 2.0);
  const double c = half_gap * half_gap;
  const double disc = std::sqrt(1.0 - 4.0 * c);
  const double low = 2.0 * c / (1.0 + disc);  // (1 - disc) / 2 without cancellation
  return {low, 1.0 - low};
}

}  // namespace nuqc
