#pragma once

// Probability-form quantumness markers for a two-flavor neutrino state and the
// bipartite flavor density matrix they are derived from.

#include <complex>

#include "nuqc/qubit_algebra.hpp"

namespace nuqc {

/// Single-qubit three-basis coherence bound; NAQC is achieved above it.
inline constexpr double kNaqcBound = 2.4494897427831781;  // sqrt(6)
/// CHSH bound on M = u1 + u2.
inline constexpr double kChshBound = 1.0;

/// 2 + 2 sqrt(p (1 - p)), in [2, 3].
double naqc_from_probability(double p);

/// 1 + 4 p (1 - p), in [1, 2].
double chsh_from_probability(double p);

struct MarkerValues {
  double probability = 1.0;
  double naqc = 2.0;
  double chsh = 1.0;
  bool naqc_violated = false;  // naqc > sqrt(6)
  bool chsh_violated = false;  // chsh > 1

  static MarkerValues from_probability(double p);
};

/// Density matrix of a_trans |01> + a_surv |10>. Throws InvalidAmplitudes
/// unless |a_surv|^2 + |a_trans|^2 = 1 within 1e-10.
TwoQubitState flavor_density_matrix(std::complex<double> a_surv, std::complex<double> a_trans);

struct ProbabilityWindow {
  double low;
  double high;

  bool contains(double p) const { return p > low && p < high; }
};

/// Open interval of survival probabilities for which NAQC is achieved,
/// i.e. the roots of 2 + 2 sqrt(p (1 - p)) = sqrt(6).
ProbabilityWindow naqc_violation_threshold();

}  // namespace nuqc
