#pragma once

#include <optional>
#include <vector>

#include "holevo/correlations.hpp"
#include "holevo/measurement.hpp"
#include "holevo/qstate.hpp"

namespace holevo {

enum class ChannelKind { BF, PF, BPF, GAD, DEPOL1 };

// One decoherence channel with its strength parameters. p and gamma live in
// [0, 1]; the closed-form correlation transformation for GAD exists only at
// p = 1/2. DEPOL1 acts on qubit A alone, the others on both qubits.
struct ChannelSpec {
  ChannelKind kind;
  double p = 0.0;
  double gamma = 0.0;  // GAD only

  static ChannelSpec bit_flip(double p);
  static ChannelSpec phase_flip(double p);
  static ChannelSpec bit_phase_flip(double p);
  static ChannelSpec gad(double gamma, double p = 0.5);
  static ChannelSpec depolarizing1(double p);
};

// Kraus operators; 2 for BF/PF/BPF, 4 for GAD and DEPOL1. They satisfy
// sum_k E_k^dag E_k = I for every admissible parameter.
std::vector<Eigen::Matrix2cd> kraus_set(const ChannelSpec& spec);

// eps(rho) = sum_{i,j} (E_i (x) E_j) rho (E_i (x) E_j)^dag for the two-sided
// channels; DEPOL1 applies sum_i (D_i (x) I) rho (D_i (x) I)^dag.
Eigen::Matrix4cd apply_two_sided(const Eigen::Matrix4cd& rho,
                                 const ChannelSpec& spec);

// c_i = tr(rho sigma_i (x) sigma_i).
CorrelationTriple correlation_readback(const Eigen::Matrix4cd& rho);

// Closed-form correlation transformation:
//   BF   (c1,          c2 (1-p)^2,  c3 (1-p)^2)
//   PF   (c1 (1-p)^2,  c2 (1-p)^2,  c3)
//   BPF  (c1 (1-p)^2,  c2,          c3 (1-p)^2)
//   GAD  (c1 (1-g),    c2 (1-g),    c3 (1-g)^2)   [p = 1/2 only]
//   DEPOL1  (1 - 4p/3) c
CorrelationTriple transformed_c(const CorrelationTriple& c,
                                const ChannelSpec& spec);

// Full measure report of the channel-transformed state.
MeasureReport measures_under_channel(const CorrelationTriple& c,
                                     const ChannelSpec& spec,
                                     const std::optional<WeakStrength>& x = {});

// Maximal Holevo quantity of the Werner state after GAD: the closed form at
// effective correlation z (1 - gamma).
double gad_maximal_holevo_werner(double z, double gamma);

// Weak analog, at effective correlation z (1 - gamma) tanh x.
double gad_weak_maximal_holevo_werner(double z, double gamma,
                                      const WeakStrength& x);

// Weak strength realized by depolarizing noise: tanh x = 1 - 4p/3. Saturated
// (and capped at x = 50) when p is so small that 1 - 4p/3 rounds to 1.
struct NoiseStrength {
  WeakStrength x;
  bool saturated;
};

NoiseStrength weak_from_noise(double p);

// Which qubit the depolarizing noise hits. The default noises qubit A while
// the measurement acts on B; for Bell-diagonal states side B is equivalent.
enum class NoisySide { A, B };

struct EquivalenceReport {
  double max_state_distance;    // over matched outcomes, best pairing
  double max_probability_error;
  bool swapped;                 // the minimizing pairing crosses outcome labels
};

// Compare {depolarize, then project along z} against the weak ensemble at
// x = artanh(1 - 4p/3), matching outcomes up to permutation.
EquivalenceReport depolarize_then_project_equivalence(
    const CorrelationTriple& c, const MeasurementDirection& z, double p,
    NoisySide side = NoisySide::A);

}  // namespace holevo
