#pragma once

#include <Eigen/Dense>

#include <array>
#include <span>

namespace holevo {

// Eigenvalues above -kPhysicalityTol count as nonnegative; anything this
// close to zero is clamped before entropies are taken.
inline constexpr double kPhysicalityTol = 1e-12;

// Correlation functions (c1, c2, c3) of a Bell-diagonal two-qubit state
//   rho = 1/4 (I (x) I + sum_i c_i sigma_i (x) sigma_i),   -1 <= c_i <= 1.
struct CorrelationTriple {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  Eigen::Vector3d as_vector() const { return {c1, c2, c3}; }
};

// Werner state rho = z |Psi-><Psi-| + (1-z)/4 I, equivalently parametrized
// by alpha with z = alpha / (2 - alpha). Covers z in [-1/3, 1].
class WernerParams {
 public:
  static WernerParams from_z(double z);
  static WernerParams from_alpha(double alpha);

  double z() const { return z_; }
  double alpha() const { return 2.0 * z_ / (1.0 + z_); }
  CorrelationTriple triple() const { return {-z_, -z_, -z_}; }

 private:
  explicit WernerParams(double z) : z_(z) {}
  double z_;
};

// Pauli matrix sigma_i, i in {1, 2, 3}.
const Eigen::Matrix2cd& pauli(int i);

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

// 1/2 (I + b . sigma); a valid qubit state iff |b| <= 1.
Eigen::Matrix2cd qubit_from_bloch(const Eigen::Vector3d& b);

// The four Bell-basis eigenvalues of bell_diagonal(c):
//   1/4 (1 - c1 - c2 - c3), 1/4 (1 - c1 + c2 + c3),
//   1/4 (1 + c1 - c2 + c3), 1/4 (1 + c1 + c2 - c3).
std::array<double, 4> bell_eigenvalues(const CorrelationTriple& c);

bool is_physical(const CorrelationTriple& c, double tol = kPhysicalityTol);

// Throws std::invalid_argument naming the negative eigenvalue.
void require_physical(const CorrelationTriple& c, double tol = kPhysicalityTol);

// The closed forms are defined on the whole cube [-1, 1]^3 even off the
// physical polytope; nothing is defined outside it.
void require_in_unit_cube(const CorrelationTriple& c,
                          double tol = kPhysicalityTol);

Eigen::Matrix4cd bell_diagonal(const CorrelationTriple& c);
Eigen::Matrix4cd bell_diagonal_unchecked(const CorrelationTriple& c);

// -sum_i p_i log2 p_i with 0 log 0 = 0; entries in [-1e-10, 0) are clamped.
double entropy_bits(std::span<const double> spectrum);

// Von Neumann entropy in bits. 2x2 inputs use the closed-form Hermitian
// eigenvalues; larger matrices go through a self-adjoint eigensolver.
double von_neumann_entropy(const Eigen::Ref<const Eigen::MatrixXcd>& rho);

// I(rho_AB) = S(rho_A) + S(rho_B) - S(rho_AB); both marginals of a
// Bell-diagonal state are I/2, so this is 2 - S(rho_AB).
double mutual_information(const CorrelationTriple& c);

enum class Subsystem { A, B };

// Partial trace over the complementary subsystem.
Eigen::Matrix2cd reduced_state(const Eigen::Matrix4cd& rho, Subsystem keep);

// 1/2 sum_i |lambda_i(rho - sigma)|; zero iff the states are equal.
double trace_distance(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                      const Eigen::Ref<const Eigen::MatrixXcd>& sigma);

bool is_density_matrix(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                       double hermitian_tol = 1e-12, double trace_tol = 1e-12,
                       double eigenvalue_tol = 1e-10);

// Throws std::invalid_argument naming the violated invariant.
void validate_density_matrix(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                             double hermitian_tol = 1e-12,
                             double trace_tol = 1e-12,
                             double eigenvalue_tol = 1e-10);

}  // namespace holevo
