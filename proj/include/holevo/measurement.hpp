#pragma once

#include <array>
#include <utility>

#include "holevo/qstate.hpp"

namespace holevo {

// Parameters of a local unitary V = t I + i (y1 s1 + y2 s2 + y3 s3) with
// t^2 + y1^2 + y2^2 + y3^2 = 1.
struct UnitaryParams {
  UnitaryParams(double t, double y1, double y2, double y3);
  static UnitaryParams normalized(double t, double y1, double y2, double y3);

  double t, y1, y2, y3;
};

Eigen::Matrix2cd unitary_matrix(const UnitaryParams& u);

// Unit vector z on the Bloch sphere; all measurement dependence of the
// post-measurement ensembles enters through it.
class MeasurementDirection {
 public:
  explicit MeasurementDirection(const Eigen::Vector3d& z);
  static MeasurementDirection normalized(const Eigen::Vector3d& v);

  const Eigen::Vector3d& z() const { return z_; }

 private:
  Eigen::Vector3d z_;
};

// Weak measurement strength x > 0; the effective Bloch scaling is tanh x,
// which rounds to 1.0 in double precision for x >~ 19 (projective limit).
class WeakStrength {
 public:
  explicit WeakStrength(double x);

  double x() const { return x_; }
  double strength() const { return strength_; }

 private:
  double x_;
  double strength_;
};

enum class MeasurementFamily { Projective, Weak };

struct Outcome {
  double probability;
  Eigen::Matrix2cd state;
};

// Two-outcome post-measurement ensemble {p_i; rho_{A|i}}. Outcome 0 is the
// first projector (respectively P(+x)); see the sign conventions below.
struct MeasuredEnsemble {
  MeasurementFamily label;
  std::array<Outcome, 2> outcomes;

  Eigen::Matrix2cd average() const;
  void validate() const;  // probabilities >= 0 summing to 1, states valid
};

//   z1 = 2(-t y2 + y1 y3), z2 = 2(t y1 + y2 y3), z3 = t^2 + y3^2 - y1^2 - y2^2
// The image is always a unit vector.
MeasurementDirection direction_from_unitary(const UnitaryParams& u);

// Projective measurement of z.sigma on B. Both probabilities are 1/2 and the
// conditional Bloch vectors are +-(c1 z1, c2 z2, c3 z3), + for outcome 0.
MeasuredEnsemble projective_ensemble(const CorrelationTriple& c,
                                     const MeasurementDirection& z);

// P(+x), P(-x) built from the projectors 1/2 (I +- z.sigma):
//   P(+x) = sqrt((1 - tanh x)/2) P0 + sqrt((1 + tanh x)/2) P1
// They satisfy P(+x)^2 + P(-x)^2 = I; as x -> inf, P(+x) -> P1, P(-x) -> P0.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> weak_operators(
    const WeakStrength& x, const MeasurementDirection& z);

// Weak measurement on B. Probabilities 1/2; conditional Bloch vectors are
// -+ tanh(x) (c1 z1, c2 z2, c3 z3) -- outcome 0 (+x) carries the minus sign,
// opposite to the projective labeling.
MeasuredEnsemble weak_ensemble(const CorrelationTriple& c,
                               const MeasurementDirection& z,
                               const WeakStrength& x);

// S(sum_i p_i rho_i) - sum_i p_i S(rho_i), in bits.
double holevo_of_ensemble(const MeasuredEnsemble& e);

// sum_i p_i S(rho_i), in bits.
double conditional_entropy(const MeasuredEnsemble& e);

}  // namespace holevo
