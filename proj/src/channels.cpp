#include "holevo/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace holevo {

namespace {

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) +
                                " must lie in [0, 1], got " +
                                std::to_string(v));
  }
}

ChannelSpec make(ChannelKind kind, double p, double gamma) {
  check_unit_interval(p, "p");
  if (kind == ChannelKind::GAD) check_unit_interval(gamma, "gamma");
  return ChannelSpec{kind, p, gamma};
}

Eigen::Matrix4cd apply_kraus_two_sided(const Eigen::Matrix4cd& rho,
                                       const std::vector<Eigen::Matrix2cd>& ks) {
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (const auto& ei : ks) {
    for (const auto& ej : ks) {
      const Eigen::Matrix4cd k = kron(ei, ej);
      out += k * rho * k.adjoint();
    }
  }
  return out;
}

Eigen::Matrix4cd apply_kraus_one_sided(const Eigen::Matrix4cd& rho,
                                       const std::vector<Eigen::Matrix2cd>& ks,
                                       NoisySide side) {
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (const auto& d : ks) {
    const Eigen::Matrix4cd k = side == NoisySide::A
                                   ? kron(d, Eigen::Matrix2cd::Identity())
                                   : kron(Eigen::Matrix2cd::Identity(), d);
    out += k * rho * k.adjoint();
  }
  return out;
}

}  // namespace

ChannelSpec ChannelSpec::bit_flip(double p) {
  return make(ChannelKind::BF, p, 0.0);
}
ChannelSpec ChannelSpec::phase_flip(double p) {
  return make(ChannelKind::PF, p, 0.0);
}
ChannelSpec ChannelSpec::bit_phase_flip(double p) {
  return make(ChannelKind::BPF, p, 0.0);
}
ChannelSpec ChannelSpec::gad(double gamma, double p) {
  return make(ChannelKind::GAD, p, gamma);
}
ChannelSpec ChannelSpec::depolarizing1(double p) {
  return make(ChannelKind::DEPOL1, p, 0.0);
}

std::vector<Eigen::Matrix2cd> kraus_set(const ChannelSpec& spec) {
  check_unit_interval(spec.p, "p");
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  switch (spec.kind) {
    case ChannelKind::BF:
      return {std::sqrt(1.0 - spec.p / 2.0) * id,
              std::sqrt(spec.p / 2.0) * pauli(1)};
    case ChannelKind::PF:
      return {std::sqrt(1.0 - spec.p / 2.0) * id,
              std::sqrt(spec.p / 2.0) * pauli(3)};
    case ChannelKind::BPF:
      return {std::sqrt(1.0 - spec.p / 2.0) * id,
              std::sqrt(spec.p / 2.0) * pauli(2)};
    case ChannelKind::GAD: {
      check_unit_interval(spec.gamma, "gamma");
      const double sp = std::sqrt(spec.p);
      const double sq = std::sqrt(1.0 - spec.p);
      const double root = std::sqrt(1.0 - spec.gamma);
      const double rg = std::sqrt(spec.gamma);
      Eigen::Matrix2cd e0, e1, e2, e3;
      e0 << 1, 0, 0, root;
      e1 << 0, rg, 0, 0;
      e2 << root, 0, 0, 1;
      e3 << 0, 0, rg, 0;
      return {sp * e0, sp * e1, sq * e2, sq * e3};
    }
    case ChannelKind::DEPOL1: {
      const double r = std::sqrt(spec.p / 3.0);
      return {std::sqrt(1.0 - spec.p) * id, r * pauli(1), r * pauli(2),
              r * pauli(3)};
    }
  }
  throw std::invalid_argument("unknown channel kind");
}

Eigen::Matrix4cd apply_two_sided(const Eigen::Matrix4cd& rho,
                                 const ChannelSpec& spec) {
  const std::vector<Eigen::Matrix2cd> ks = kraus_set(spec);
  if (spec.kind == ChannelKind::DEPOL1) {
    return apply_kraus_one_sided(rho, ks, NoisySide::A);
  }
  return apply_kraus_two_sided(rho, ks);
}

CorrelationTriple correlation_readback(const Eigen::Matrix4cd& rho) {
  CorrelationTriple c;
  c.c1 = (rho * kron(pauli(1), pauli(1))).trace().real();
  c.c2 = (rho * kron(pauli(2), pauli(2))).trace().real();
  c.c3 = (rho * kron(pauli(3), pauli(3))).trace().real();
  return c;
}

CorrelationTriple transformed_c(const CorrelationTriple& c,
                                const ChannelSpec& spec) {
  check_unit_interval(spec.p, "p");
  const double q = (1.0 - spec.p) * (1.0 - spec.p);
  switch (spec.kind) {
    case ChannelKind::BF:
      return {c.c1, c.c2 * q, c.c3 * q};
    case ChannelKind::PF:
      return {c.c1 * q, c.c2 * q, c.c3};
    case ChannelKind::BPF:
      return {c.c1 * q, c.c2, c.c3 * q};
    case ChannelKind::GAD: {
      if (spec.p != 0.5) {
        throw std::invalid_argument(
            "the GAD correlation transformation requires p = 1/2; use "
            "apply_two_sided for other p");
      }
      check_unit_interval(spec.gamma, "gamma");
      const double g = 1.0 - spec.gamma;
      return {c.c1 * g, c.c2 * g, c.c3 * g * g};
    }
    case ChannelKind::DEPOL1: {
      const double s = 1.0 - 4.0 * spec.p / 3.0;
      return {c.c1 * s, c.c2 * s, c.c3 * s};
    }
  }
  throw std::invalid_argument("unknown channel kind");
}

MeasureReport measures_under_channel(const CorrelationTriple& c,
                                     const ChannelSpec& spec,
                                     const std::optional<WeakStrength>& x) {
  return measure_report(transformed_c(c, spec), x);
}

double gad_maximal_holevo_werner(double z, double gamma) {
  return maximal_holevo(WernerParams::from_z(z * (1.0 - gamma)).triple());
}

double gad_weak_maximal_holevo_werner(double z, double gamma,
                                      const WeakStrength& x) {
  return weak_maximal_holevo(WernerParams::from_z(z * (1.0 - gamma)).triple(),
                             x);
}

NoiseStrength weak_from_noise(double p) {
  if (!(p > 0.0 && p < 0.75)) {
    throw std::domain_error(
        "weak_from_noise requires p in (0, 3/4) so that 1 - 4p/3 is a "
        "strength in (0, 1); got p = " + std::to_string(p));
  }
  const double s = 1.0 - 4.0 * p / 3.0;
  if (s >= 1.0) {
    // p below ~1.7e-16: the strength rounds to 1 and artanh would overflow.
    return {WeakStrength(50.0), true};
  }
  return {WeakStrength(std::atanh(s)), false};
}

EquivalenceReport depolarize_then_project_equivalence(
    const CorrelationTriple& c, const MeasurementDirection& z, double p,
    NoisySide side) {
  const Eigen::Matrix4cd noisy = apply_kraus_one_sided(
      bell_diagonal(c), kraus_set(ChannelSpec::depolarizing1(p)), side);
  const MeasuredEnsemble projected =
      projective_ensemble(correlation_readback(noisy), z);
  const MeasuredEnsemble weak = weak_ensemble(c, z, weak_from_noise(p).x);

  auto pairing_distance = [&](int i0, int i1) {
    return std::max(
        trace_distance(projected.outcomes[0].state, weak.outcomes[i0].state),
        trace_distance(projected.outcomes[1].state, weak.outcomes[i1].state));
  };
  const double direct = pairing_distance(0, 1);
  const double crossed = pairing_distance(1, 0);
  const bool swapped = crossed < direct;
  const double prob_err = std::max(
      std::abs(projected.outcomes[0].probability -
               weak.outcomes[swapped ? 1 : 0].probability),
      std::abs(projected.outcomes[1].probability -
               weak.outcomes[swapped ? 0 : 1].probability));
  return {swapped ? crossed : direct, prob_err, swapped};
}

}  // namespace holevo
