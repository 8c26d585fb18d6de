#pragma once

// Brute-force two-qubit machinery: density matrices, projective Pauli
// measurements on qubit A, conditional states of qubit B, l1-norm coherence,
// the steering-game NAQC sum and the correlation-matrix CHSH quantity.
//
// Everything here works on explicit matrices so it can serve as the
// independent oracle for the probability-form markers.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace nuqc {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;
using Matrix3 = Eigen::Matrix3d;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kZeroBranchProbability = 1e-14;
inline constexpr double kImaginaryResidueTolerance = 1e-10;

enum class PauliAxis { X, Y, Z };

inline constexpr std::array<PauliAxis, 3> kPauliAxes = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

const char* to_string(PauliAxis axis);

/// Measurement outcome index. First is the +1 eigenvector of the axis:
/// |x1> = (1,1)/sqrt2, |y1> = (1,i)/sqrt2, |z1> = (1,0).
enum class Outcome { First = 1, Second = 2 };

/// Eigenvector of a Pauli matrix with the fixed phase convention above.
Vector2c pauli_eigenvector(PauliAxis axis, Outcome outcome);

/// The Pauli matrix itself.
Matrix2c pauli_matrix(PauliAxis axis);

class QubitState {
 public:
  /// Validates Hermiticity, unit trace and positivity; throws InvalidState.
  explicit QubitState(const Matrix2c& m);

  static QubitState from_bloch(double nx, double ny, double nz);
  static QubitState pure(const Vector2c& psi);

  const Matrix2c& matrix() const { return m_; }
  std::array<double, 3> bloch_vector() const;

 private:
  Matrix2c m_;
};

/// 4x4 density matrix in the basis {|00>, |01>, |10>, |11>}, qubit A first.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Matrix4c& m);

  static TwoQubitState pure(const Vector4c& psi);
  static TwoQubitState product(const QubitState& a, const QubitState& b);
  static TwoQubitState maximally_mixed();

  const Matrix4c& matrix() const { return m_; }

 private:
  Matrix4c m_;
};

/// Sum of off-diagonal magnitudes of rho in the eigenbasis of `basis`.
double l1_coherence(const QubitState& rho, PauliAxis basis);

/// l1 coherence summed over the X, Y and Z eigenbases. Bounded by sqrt(6).
double sum_coherence_three_bases(const QubitState& rho);

struct ConditionalOutcome {
  double probability;
  QubitState state;
};

/// Projects qubit A onto the given eigenvector of `axis` and returns the
/// branch probability with the normalized reduced state of B.
/// Throws ZeroProbabilityBranch when the probability is below 1e-14.
ConditionalOutcome measure_conditional(const TwoQubitState& rho_ab, PauliAxis axis,
                                       Outcome outcome);

/// Branch probability alone; defined for every branch including empty ones.
double branch_probability(const TwoQubitState& rho_ab, PauliAxis axis, Outcome outcome);

/// Steering-game NAQC value: half the probability-weighted sum, over Alice's
/// axis j, outcome b and Bob's bases i != j, of the l1 coherence of B's
/// conditional state. Empty branches carry weight zero.
double naqc_steering(const TwoQubitState& rho_ab);

/// T_mn = Tr[rho (sigma_m (x) sigma_n)]. Throws InconsistentState if any
/// entry carries an imaginary part above 1e-10.
Matrix3 correlation_matrix(const TwoQubitState& rho_ab);

/// Eigenvalues of a real symmetric 3x3 matrix by cyclic Jacobi rotations,
/// sorted in descending order.
std::array<double, 3> symmetric_eigenvalues(const Matrix3& a);

/// Spectrum u1 >= u2 >= u3 of T^T T.
std::array<double, 3> correlation_spectrum(const TwoQubitState& rho_ab);

/// Horodecki quantity M = u1 + u2; M > 1 signals CHSH violation.
double chsh_m(const TwoQubitState& rho_ab);

}  // namespace nuqc
