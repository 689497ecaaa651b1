#include "holevo/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace holevo {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

double xlog2x(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

}  // namespace

WernerParams WernerParams::from_z(double z) {
  if (!(z >= -1.0 / 3.0 && z <= 1.0)) {
    throw std::invalid_argument("Werner z must lie in [-1/3, 1], got " +
                                std::to_string(z));
  }
  return WernerParams(z);
}

WernerParams WernerParams::from_alpha(double alpha) {
  if (!(alpha >= -1.0 && alpha <= 1.0)) {
    throw std::invalid_argument("Werner alpha must lie in [-1, 1], got " +
                                std::to_string(alpha));
  }
  return WernerParams(alpha / (2.0 - alpha));
}

const Eigen::Matrix2cd& pauli(int i) {
  static const Eigen::Matrix2cd s1 = (Eigen::Matrix2cd() << 0, 1,
                                      1, 0).finished();
  static const Eigen::Matrix2cd s2 = (Eigen::Matrix2cd() << 0, -kI,
                                      kI, 0).finished();
  static const Eigen::Matrix2cd s3 = (Eigen::Matrix2cd() << 1, 0,
                                      0, -1).finished();
  switch (i) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
  }
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Matrix2cd qubit_from_bloch(const Eigen::Vector3d& b) {
  Eigen::Matrix2cd m;
  m(0, 0) = 0.5 * (1.0 + b.z());
  m(1, 1) = 0.5 * (1.0 - b.z());
  m(0, 1) = 0.5 * std::complex<double>(b.x(), -b.y());
  m(1, 0) = 0.5 * std::complex<double>(b.x(), b.y());
  return m;
}

std::array<double, 4> bell_eigenvalues(const CorrelationTriple& c) {
  return {0.25 * (1.0 - c.c1 - c.c2 - c.c3),
          0.25 * (1.0 - c.c1 + c.c2 + c.c3),
          0.25 * (1.0 + c.c1 - c.c2 + c.c3),
          0.25 * (1.0 + c.c1 + c.c2 - c.c3)};
}

bool is_physical(const CorrelationTriple& c, double tol) {
  for (double lambda : bell_eigenvalues(c)) {
    if (lambda < -tol) return false;
  }
  return true;
}

void require_physical(const CorrelationTriple& c, double tol) {
  const auto lambdas = bell_eigenvalues(c);
  for (int i = 0; i < 4; ++i) {
    if (lambdas[i] < -tol) {
      std::ostringstream msg;
      msg << "unphysical correlation triple (" << c.c1 << ", " << c.c2 << ", "
          << c.c3 << "): Bell-basis eigenvalue " << i << " is "
          << lambdas[i];
      throw std::invalid_argument(msg.str());
    }
  }
}

void require_in_unit_cube(const CorrelationTriple& c, double tol) {
  for (double v : {c.c1, c.c2, c.c3}) {
    if (std::abs(v) > 1.0 + tol) {
      std::ostringstream msg;
      msg << "correlation component " << v << " lies outside [-1, 1]";
      throw std::invalid_argument(msg.str());
    }
  }
}

Eigen::Matrix4cd bell_diagonal_unchecked(const CorrelationTriple& c) {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity();
  rho += c.c1 * kron(pauli(1), pauli(1));
  rho += c.c2 * kron(pauli(2), pauli(2));
  rho += c.c3 * kron(pauli(3), pauli(3));
  return 0.25 * rho;
}

Eigen::Matrix4cd bell_diagonal(const CorrelationTriple& c) {
  require_physical(c);
  return bell_diagonal_unchecked(c);
}

double entropy_bits(std::span<const double> spectrum) {
  double s = 0.0;
  for (double lambda : spectrum) {
    if (lambda < 0.0) {
      if (lambda < -1e-10) {
        throw std::invalid_argument("entropy of a spectrum with eigenvalue " +
                                    std::to_string(lambda));
      }
      continue;  // clamp floating-point noise to zero
    }
    s -= xlog2x(lambda);
  }
  return std::max(0.0, s);  // eigenvalues a rounding error above 1 would
                            // otherwise leave S at -O(eps)
}

double von_neumann_entropy(const Eigen::Ref<const Eigen::MatrixXcd>& rho) {
  if (rho.rows() == 2 && rho.cols() == 2) {
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double m = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(rho(0, 1)));
    const std::array<double, 2> lam{m - r, m + r};
    return entropy_bits(lam);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return entropy_bits(std::span<const double>(ev.data(), ev.size()));
}

double mutual_information(const CorrelationTriple& c) {
  require_physical(c);
  return 2.0 - entropy_bits(bell_eigenvalues(c));
}

Eigen::Matrix2cd reduced_state(const Eigen::Matrix4cd& rho, Subsystem keep) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  // Index convention: row = 2a + b over subsystems A (x) B.
  if (keep == Subsystem::A) {
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int b = 0; b < 2; ++b)
          out(a, ap) += rho(2 * a + b, 2 * ap + b);
  } else {
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        for (int a = 0; a < 2; ++a)
          out(b, bp) += rho(2 * a + b, 2 * a + bp);
  }
  return out;
}

double trace_distance(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                      const Eigen::Ref<const Eigen::MatrixXcd>& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

bool is_density_matrix(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                       double hermitian_tol, double trace_tol,
                       double eigenvalue_tol) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol) return false;
  if (std::abs(rho.trace() - std::complex<double>(1.0)) > trace_tol)
    return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -eigenvalue_tol;
}

void validate_density_matrix(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                             double hermitian_tol, double trace_tol,
                             double eigenvalue_tol) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > hermitian_tol) {
    throw std::invalid_argument("density matrix not Hermitian, deviation " +
                                std::to_string(herm));
  }
  const double tr_err = std::abs(rho.trace() - std::complex<double>(1.0));
  if (tr_err > trace_tol) {
    throw std::invalid_argument("density matrix trace differs from 1 by " +
                                std::to_string(tr_err));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  const double min_ev = solver.eigenvalues().minCoeff();
  if (min_ev < -eigenvalue_tol) {
    throw std::invalid_argument("density matrix has negative eigenvalue " +
                                std::to_string(min_ev));
  }
}

}  // namespace holevo
