#pragma once

// Test-only generators and an oracle for the steering sum that goes through
// Bloch vectors instead of basis projections.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "nuqc/qubit_algebra.hpp"

namespace nuqc::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0xC0FFEEULL);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// Random full-rank mixed state G G^dagger / Tr.
inline TwoQubitState random_mixed_state() {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix4c a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = {g(rng()), g(rng())};
  }
  Matrix4c m = a * a.adjoint();
  m /= m.trace().real();
  return TwoQubitState(m);
}

inline Vector4c random_pure_vector() {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector4c v;
  for (int i = 0; i < 4; ++i) v(i) = {g(rng()), g(rng())};
  return v / v.norm();
}

/// Eigenvectors of sigma_x, sigma_y, sigma_z written out by hand, each
/// multiplied by an arbitrary phase. Index [axis][outcome].
inline std::array<std::array<Vector2c, 2>, 3> phased_eigenvectors(double phase_seed) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  std::array<std::array<Vector2c, 2>, 3> e;
  e[0][0] << r, r;
  e[0][1] << r, -r;
  e[1][0] << r, i * r;
  e[1][1] << r, -i * r;
  e[2][0] << 1.0, 0.0;
  e[2][1] << 0.0, 1.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 2; ++b) e[a][b] *= std::polar(1.0, phase_seed * (1 + a + 3 * b));
  }
  return e;
}

/// Steering NAQC via Bloch geometry: for a qubit with Bloch vector n the l1
/// coherence in the eigenbasis of axis i is the length of n projected on the
/// plane orthogonal to i.
inline double naqc_bloch_oracle(const Matrix4c& rho, double phase_seed = 0.0) {
  const auto e = phased_eigenvectors(phase_seed);
  double total = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int b = 0; b < 2; ++b) {
      // <e|_A rho |e>_A as a 2x2 block on B.
      Matrix2c block = Matrix2c::Zero();
      for (int a = 0; a < 2; ++a) {
        for (int a2 = 0; a2 < 2; ++a2) {
          block += std::conj(e[j][b](a)) * e[j][b](a2) * rho.block<2, 2>(2 * a, 2 * a2);
        }
      }
      const double p = block.trace().real();
      if (p < 1e-14) continue;
      const std::array<double, 3> n = {2.0 * block(0, 1).real() / p,
                                       -2.0 * block(0, 1).imag() / p,
                                       (block(0, 0) - block(1, 1)).real() / p};
      for (int i = 0; i < 3; ++i) {
        if (i == j) continue;
        double perp2 = 0.0;
        for (int k = 0; k < 3; ++k) {
          if (k != i) perp2 += n[k] * n[k];
        }
        total += p * std::sqrt(perp2);
      }
    }
  }
  return 0.5 * total;
}

}  // namespace nuqc::testing
