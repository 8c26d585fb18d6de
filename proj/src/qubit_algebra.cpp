#include "nuqc/qubit_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "nuqc/errors.hpp"

namespace nuqc {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI{0.0, 1.0};

template <typename Matrix>
void validate_density(const Matrix& m, const char* what) {
  const double tol = kHermitianTolerance;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidState(std::string(what) + ": non-finite entry");
      }
      if (std::abs(z - std::conj(m(c, r))) > tol) {
        std::ostringstream os;
        os << what << ": not Hermitian at (" << r << "," << c << ")";
        throw InvalidState(os.str());
      }
    }
  }
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance) {
    std::ostringstream os;
    os << what << ": trace " << tr.real() << " is not 1";
    throw InvalidState(os.str());
  }
  // Eigenvalues of the Hermitian part; the anti-Hermitian residue is below tol.
  const Matrix herm = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvalidState(std::string(what) + ": eigenvalue solver failed");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdTolerance) {
    std::ostringstream os;
    os << what << ": negative eigenvalue " << min_eig;
    throw InvalidState(os.str());
  }
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

// Tr_A of a 4x4 operator with A the leading tensor factor.
Matrix2c partial_trace_a(const Matrix4c& m) {
  return m.block<2, 2>(0, 0) + m.block<2, 2>(2, 2);
}

// Returns p and the unnormalized reduced state of B for one branch.
std::pair<double, Matrix2c> project_branch(const TwoQubitState& rho_ab, PauliAxis axis,
                                           Outcome outcome) {
  const Vector2c e = pauli_eigenvector(axis, outcome);
  const Matrix2c proj = e * e.adjoint();
  const Matrix4c big = kron(proj, Matrix2c::Identity());
  const Matrix4c post = big * rho_ab.matrix() * big;
  const double p = post.trace().real();
  return {p, partial_trace_a(post)};
}

}  // namespace

const char* to_string(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return "x";
    case PauliAxis::Y:
      return "y";
    case PauliAxis::Z:
      return "z";
  }
  return "?";
}

Vector2c pauli_eigenvector(PauliAxis axis, Outcome outcome) {
  const double sign = outcome == Outcome::First ? 1.0 : -1.0;
  Vector2c v;
  switch (axis) {
    case PauliAxis::X:
      v << kInvSqrt2, sign * kInvSqrt2;
      break;
    case PauliAxis::Y:
      v << kInvSqrt2, sign * kI * kInvSqrt2;
      break;
    case PauliAxis::Z:
      if (outcome == Outcome::First) {
        v << 1.0, 0.0;
      } else {
        v << 0.0, 1.0;
      }
      break;
  }
  return v;
}

Matrix2c pauli_matrix(PauliAxis axis) {
  Matrix2c s;
  switch (axis) {
    case PauliAxis::X:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case PauliAxis::Y:
      s << 0.0, -kI, kI, 0.0;
      break;
    case PauliAxis::Z:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return s;
}

QubitState::QubitState(const Matrix2c& m) : m_(m) { validate_density(m_, "QubitState"); }

QubitState QubitState::from_bloch(double nx, double ny, double nz) {
  Matrix2c m = Matrix2c::Identity() + nx * pauli_matrix(PauliAxis::X) +
               ny * pauli_matrix(PauliAxis::Y) + nz * pauli_matrix(PauliAxis::Z);
  return QubitState(0.5 * m);
}

QubitState QubitState::pure(const Vector2c& psi) {
  const double norm = psi.squaredNorm();
  if (!(norm > 0.0)) throw InvalidState("QubitState::pure: zero vector");
  return QubitState(psi * psi.adjoint() / norm);
}

std::array<double, 3> QubitState::bloch_vector() const {
  return {2.0 * m_(0, 1).real(), -2.0 * m_(0, 1).imag(), (m_(0, 0) - m_(1, 1)).real()};
}

TwoQubitState::TwoQubitState(const Matrix4c& m) : m_(m) { validate_density(m_, "TwoQubitState"); }

TwoQubitState TwoQubitState::pure(const Vector4c& psi) {
  const double norm = psi.squaredNorm();
  if (!(norm > 0.0)) throw InvalidState("TwoQubitState::pure: zero vector");
  return TwoQubitState(psi * psi.adjoint() / norm);
}

TwoQubitState TwoQubitState::product(const QubitState& a, const QubitState& b) {
  return TwoQubitState(kron(a.matrix(), b.matrix()));
}

TwoQubitState TwoQubitState::maximally_mixed() { return TwoQubitState(Matrix4c::Identity() * 0.25); }

double l1_coherence(const QubitState& rho, PauliAxis basis) {
  const Vector2c b1 = pauli_eigenvector(basis, Outcome::First);
  const Vector2c b2 = pauli_eigenvector(basis, Outcome::Second);
  const Complex c12 = b1.dot(rho.matrix() * b2);
  const Complex c21 = b2.dot(rho.matrix() * b1);
  return std::abs(c12) + std::abs(c21);
}

double sum_coherence_three_bases(const QubitState& rho) {
  double total = 0.0;
  for (PauliAxis axis : kPauliAxes) total += l1_coherence(rho, axis);
  return total;
}

double branch_probability(const TwoQubitState& rho_ab, PauliAxis axis, Outcome outcome) {
  return project_branch(rho_ab, axis, outcome).first;
}

ConditionalOutcome measure_conditional(const TwoQubitState& rho_ab, PauliAxis axis,
                                       Outcome outcome) {
  auto [p, reduced] = project_branch(rho_ab, axis, outcome);
  if (p < kZeroBranchProbability) {
    std::ostringstream os;
    os << "measure_conditional: branch (" << to_string(axis) << ", " << static_cast<int>(outcome)
       << ") has probability " << p << "; conditional state undefined";
    throw ZeroProbabilityBranch(os.str());
  }
  return {p, QubitState(reduced / p)};
}

double naqc_steering(const TwoQubitState& rho_ab) {
  double total = 0.0;
  for (PauliAxis measured : kPauliAxes) {
    for (Outcome outcome : {Outcome::First, Outcome::Second}) {
      if (branch_probability(rho_ab, measured, outcome) < kZeroBranchProbability) continue;
      const ConditionalOutcome cond = measure_conditional(rho_ab, measured, outcome);
      for (PauliAxis basis : kPauliAxes) {
        if (basis == measured) continue;
        total += cond.probability * l1_coherence(cond.state, basis);
      }
    }
  }
  return 0.5 * total;
}

Matrix3 correlation_matrix(const TwoQubitState& rho_ab) {
  Matrix3 t;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      const Matrix4c op = kron(pauli_matrix(kPauliAxes[m]), pauli_matrix(kPauliAxes[n]));
      const Complex value = (rho_ab.matrix() * op).trace();
      if (std::abs(value.imag()) > kImaginaryResidueTolerance) {
        std::ostringstream os;
        os << "correlation_matrix: T(" << m << "," << n << ") has imaginary part "
           << value.imag();
        throw InconsistentState(os.str());
      }
      t(m, n) = value.real();
    }
  }
  return t;
}

std::array<double, 3> symmetric_eigenvalues(const Matrix3& input) {
  Matrix3 a = 0.5 * (input + input.transpose());
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double scale = a.diagonal().squaredNorm();
    if (off == 0.0 || off <= 1e-40 * scale) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, 3> eig = {a(0, 0), a(1, 1), a(2, 2)};
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::array<double, 3> correlation_spectrum(const TwoQubitState& rho_ab) {
  const Matrix3 t = correlation_matrix(rho_ab);
  return symmetric_eigenvalues(t.transpose() * t);
}

double chsh_m(const TwoQubitState& rho_ab) {
  const auto u = correlation_spectrum(rho_ab);
  return u[0] + u[1];
}

}  // namespace nuqc
