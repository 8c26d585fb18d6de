#pragma once

// Built-in oracle suite: probability-form markers against the explicit
// two-qubit computation, and the closed-form packet against quadrature.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuqc/oscillation_models.hpp"

namespace nuqc {

struct CheckResult {
  std::string name;
  std::string description;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool passed = false;
};

struct ValidationOptions {
  /// Replaces every check's tolerance when set.
  std::optional<double> tolerance;
  std::uint64_t seed = 0x5eedULL;
};

/// Evenly spaced survival probabilities 0.005 ... 0.995 (200 values).
std::vector<double> oracle_probabilities();

struct QuadraturePoint {
  GaussianPacket packet;
  double x;  // m
  double t;  // c t, m
};

/// 5 x 5 grid over (x - v t, sigma_x^P) used for the wavefunction cross-check.
std::vector<QuadraturePoint> quadrature_check_grid();

/// Largest |closed - quadrature| / |closed| over the grid.
double quadrature_max_relative_error(const std::vector<QuadraturePoint>& grid);

std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

}  // namespace nuqc
