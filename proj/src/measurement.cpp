#include "holevo/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace holevo {

namespace {

constexpr double kUnitTol = 1e-12;

}  // namespace

UnitaryParams::UnitaryParams(double t_, double y1_, double y2_, double y3_)
    : t(t_), y1(y1_), y2(y2_), y3(y3_) {
  const double norm2 = t * t + y1 * y1 + y2 * y2 + y3 * y3;
  if (std::abs(norm2 - 1.0) > kUnitTol) {
    throw std::invalid_argument(
        "UnitaryParams requires t^2 + |y|^2 = 1, got norm^2 = " +
        std::to_string(norm2));
  }
}

UnitaryParams UnitaryParams::normalized(double t, double y1, double y2,
                                        double y3) {
  const double n = std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite "
                                "unitary parameter vector");
  }
  return UnitaryParams(t / n, y1 / n, y2 / n, y3 / n);
}

Eigen::Matrix2cd unitary_matrix(const UnitaryParams& u) {
  const std::complex<double> i{0.0, 1.0};
  Eigen::Matrix2cd v = u.t * Eigen::Matrix2cd::Identity();
  v += i * (u.y1 * pauli(1) + u.y2 * pauli(2) + u.y3 * pauli(3));
  return v;
}

MeasurementDirection::MeasurementDirection(const Eigen::Vector3d& z) : z_(z) {
  if (std::abs(z_.squaredNorm() - 1.0) > kUnitTol) {
    throw std::invalid_argument(
        "MeasurementDirection requires a unit vector, got |z|^2 = " +
        std::to_string(z_.squaredNorm()));
  }
}

MeasurementDirection MeasurementDirection::normalized(
    const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite "
                                "direction");
  }
  return MeasurementDirection(Eigen::Vector3d(v / n));
}

WeakStrength::WeakStrength(double x) : x_(x), strength_(std::tanh(x)) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw std::invalid_argument(
        "weak measurement strength x must be finite and positive, got " +
        std::to_string(x));
  }
}

Eigen::Matrix2cd MeasuredEnsemble::average() const {
  return outcomes[0].probability * outcomes[0].state +
         outcomes[1].probability * outcomes[1].state;
}

void MeasuredEnsemble::validate() const {
  double sum = 0.0;
  for (const Outcome& o : outcomes) {
    if (o.probability < 0.0) {
      throw std::invalid_argument("ensemble probability is negative: " +
                                  std::to_string(o.probability));
    }
    sum += o.probability;
    validate_density_matrix(o.state);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("ensemble probabilities sum to " +
                                std::to_string(sum));
  }
}

MeasurementDirection direction_from_unitary(const UnitaryParams& u) {
  const Eigen::Vector3d z{
      2.0 * (-u.t * u.y2 + u.y1 * u.y3),
      2.0 * (u.t * u.y1 + u.y2 * u.y3),
      u.t * u.t + u.y3 * u.y3 - u.y1 * u.y1 - u.y2 * u.y2};
  // The constructor re-checks the z.z = 1 identity.
  return MeasurementDirection(z);
}

MeasuredEnsemble projective_ensemble(const CorrelationTriple& c,
                                     const MeasurementDirection& z) {
  require_physical(c);
  const Eigen::Vector3d b = c.as_vector().cwiseProduct(z.z());
  return MeasuredEnsemble{
      MeasurementFamily::Projective,
      {Outcome{0.5, qubit_from_bloch(b)}, Outcome{0.5, qubit_from_bloch(-b)}}};
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> weak_operators(
    const WeakStrength& x, const MeasurementDirection& z) {
  const Eigen::Matrix2cd zs =
      z.z().x() * pauli(1) + z.z().y() * pauli(2) + z.z().z() * pauli(3);
  const Eigen::Matrix2cd p0 = 0.5 * (Eigen::Matrix2cd::Identity() + zs);
  const Eigen::Matrix2cd p1 = 0.5 * (Eigen::Matrix2cd::Identity() - zs);
  const double s = x.strength();
  const double lo = std::sqrt(0.5 * (1.0 - s));
  const double hi = std::sqrt(0.5 * (1.0 + s));
  return {lo * p0 + hi * p1, hi * p0 + lo * p1};
}

MeasuredEnsemble weak_ensemble(const CorrelationTriple& c,
                               const MeasurementDirection& z,
                               const WeakStrength& x) {
  require_physical(c);
  const Eigen::Vector3d b =
      x.strength() * c.as_vector().cwiseProduct(z.z());
  // Outcome 0 is P(+x) and carries the minus sign.
  return MeasuredEnsemble{
      MeasurementFamily::Weak,
      {Outcome{0.5, qubit_from_bloch(-b)}, Outcome{0.5, qubit_from_bloch(b)}}};
}

double holevo_of_ensemble(const MeasuredEnsemble& e) {
  return von_neumann_entropy(e.average()) - conditional_entropy(e);
}

double conditional_entropy(const MeasuredEnsemble& e) {
  double s = 0.0;
  for (const Outcome& o : e.outcomes) {
    if (o.probability > 0.0) s += o.probability * von_neumann_entropy(o.state);
  }
  return s;
}

}  // namespace holevo
