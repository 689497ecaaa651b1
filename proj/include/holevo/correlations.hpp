#pragma once

#include <optional>

#include "holevo/measurement.hpp"
#include "holevo/qstate.hpp"

namespace holevo {

// H2(p) = -p log2 p - (1-p) log2(1-p). Accepts [0,1] with 1e-12 slack.
double binary_entropy(double p);

// C = max{|c1|, |c2|, |c3|}.
double c_max(const CorrelationTriple& c);

// Maximal Holevo quantity over projective measurements on B,
//   (1-C)/2 log2(1-C) + (1+C)/2 log2(1+C),
// evaluated in the stable form 1 - H2((1+C)/2).
double maximal_holevo(const CorrelationTriple& c);

// Classical correlation J_B; coincides with the maximal Holevo quantity for
// Bell-diagonal states.
double classical_correlation(const CorrelationTriple& c);

// Weak-measurement analog: the closed form with C replaced by C tanh x.
double weak_maximal_holevo(const CorrelationTriple& c, const WeakStrength& x);

// Super classical correlation J_B^w; equals weak_maximal_holevo.
double super_classical_correlation(const CorrelationTriple& c,
                                   const WeakStrength& x);

// D = I - J_B. Requires a physical triple.
double discord_bell_diagonal(const CorrelationTriple& c);

// D_w = I - J_B^w >= D. Requires a physical triple.
double super_discord_bell_diagonal(const CorrelationTriple& c,
                                   const WeakStrength& x);

// Entanglement of formation of the Werner state,
//   h(1/2 (1 + sqrt(1 - tau^2))),  tau = max(0, (2 alpha - 1)/(2 - alpha)).
double eof_werner(const WernerParams& w);

// Every correlation measure of one input state. The weak quantities are set
// only when a strength was supplied, eof only for declared Werner inputs.
// Entropic fields (mutual information, discords) are NaN for unphysical
// triples evaluated in the unchecked mode.
struct MeasureReport {
  CorrelationTriple c;
  std::optional<double> x;
  double mutual_information;
  double maximal_holevo;
  double classical_correlation;
  std::optional<double> weak_maximal_holevo;
  std::optional<double> super_classical_correlation;
  double discord;
  std::optional<double> super_discord;
  std::optional<double> eof;
};

MeasureReport measure_report(const CorrelationTriple& c,
                             const std::optional<WeakStrength>& x = {});
MeasureReport measure_report(const WernerParams& w,
                             const std::optional<WeakStrength>& x = {});
MeasureReport measure_report_unchecked(const CorrelationTriple& c,
                                       const std::optional<WeakStrength>& x = {});

}  // namespace holevo
