#include "holevo/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace holevo {

namespace {

double xlog2x(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

// Closed form (1-a)/2 log2(1-a) + (1+a)/2 log2(1+a) = 1 - H2((1+a)/2),
// the stable form avoiding log(0) at a = 1.
double holevo_closed_form(double a) { return 1.0 - binary_entropy(0.5 * (1.0 + a)); }

void check_equal_invariant(double lhs, double rhs, const char* what) {
  if (std::isnan(lhs) && std::isnan(rhs)) return;
  if (std::abs(lhs - rhs) > 1e-12) {
    throw std::logic_error(std::string("MeasureReport invariant violated: ") +
                           what);
  }
}

MeasureReport build_report(const CorrelationTriple& c,
                           const std::optional<WeakStrength>& x,
                           std::optional<double> eof, bool checked) {
  require_in_unit_cube(c);
  if (checked) require_physical(c);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const bool physical = is_physical(c);

  MeasureReport r;
  r.c = c;
  r.mutual_information = physical ? mutual_information(c) : nan;
  r.maximal_holevo = maximal_holevo(c);
  r.classical_correlation = classical_correlation(c);
  r.discord = r.mutual_information - r.classical_correlation;
  if (x) {
    r.x = x->x();
    r.weak_maximal_holevo = weak_maximal_holevo(c, *x);
    r.super_classical_correlation = super_classical_correlation(c, *x);
    r.super_discord = r.mutual_information - *r.super_classical_correlation;
  }
  r.eof = eof;

  check_equal_invariant(r.classical_correlation, r.maximal_holevo,
                        "classical_correlation == maximal_holevo");
  if (x) {
    check_equal_invariant(*r.super_classical_correlation,
                          *r.weak_maximal_holevo,
                          "super_classical_correlation == weak_maximal_holevo");
    check_equal_invariant(*r.super_discord,
                          r.mutual_information - *r.super_classical_correlation,
                          "super_discord == I - J_B^w");
  }
  check_equal_invariant(r.discord,
                        r.mutual_information - r.classical_correlation,
                        "discord == I - J_B");
  return r;
}

}  // namespace

double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) {
    throw std::domain_error("binary_entropy argument outside [0, 1]: " +
                            std::to_string(p));
  }
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p) + 0.0;  // +0.0 normalizes -0
}

double c_max(const CorrelationTriple& c) {
  return std::max({std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)});
}

double maximal_holevo(const CorrelationTriple& c) {
  return holevo_closed_form(c_max(c));
}

double classical_correlation(const CorrelationTriple& c) {
  return maximal_holevo(c);
}

double weak_maximal_holevo(const CorrelationTriple& c, const WeakStrength& x) {
  return holevo_closed_form(c_max(c) * x.strength());
}

double super_classical_correlation(const CorrelationTriple& c,
                                   const WeakStrength& x) {
  return weak_maximal_holevo(c, x);
}

double discord_bell_diagonal(const CorrelationTriple& c) {
  return mutual_information(c) - classical_correlation(c);
}

double super_discord_bell_diagonal(const CorrelationTriple& c,
                                   const WeakStrength& x) {
  return mutual_information(c) - super_classical_correlation(c, x);
}

double eof_werner(const WernerParams& w) {
  const double alpha = w.alpha();
  const double tau = std::max(0.0, (2.0 * alpha - 1.0) / (2.0 - alpha));
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - tau * tau)));
}

MeasureReport measure_report(const CorrelationTriple& c,
                             const std::optional<WeakStrength>& x) {
  return build_report(c, x, std::nullopt, true);
}

MeasureReport measure_report(const WernerParams& w,
                             const std::optional<WeakStrength>& x) {
  return build_report(w.triple(), x, eof_werner(w), true);
}

MeasureReport measure_report_unchecked(const CorrelationTriple& c,
                                       const std::optional<WeakStrength>& x) {
  return build_report(c, x, std::nullopt, false);
}

}  // namespace holevo
