#pragma once

#include <optional>
#include <vector>

#include "holevo/measurement.hpp"
#include "holevo/qstate.hpp"

namespace holevo {

// Brute-force search settings. The default 20000-point grid keeps the
// angular spacing well under 4 degrees; a simplex refinement then pushes the
// directional error far below the grid resolution.
struct OptimizerConfig {
  int grid_points = 20000;  // >= 1000
  int refine_iters = 200;
  double refine_tol = 1e-10;
  std::optional<WeakStrength> weak;  // empty: projective family
  int threads = 0;                   // 0: hardware concurrency

  void validate() const;
};

struct Optimum {
  double value;
  MeasurementDirection direction;
  double theta_at_optimum;
  // False when the simplex refinement hit the iteration cap before its value
  // spread fell below refine_tol; value still carries the best point found.
  bool refinement_converged;
};

// theta = sqrt(|c1 z1|^2 + |c2 z2|^2 + |c3 z3|^2), in [0, c_max(c)].
double theta(const CorrelationTriple& c, const MeasurementDirection& z);

// Fibonacci lattice of n near-uniform unit vectors.
std::vector<MeasurementDirection> sphere_grid(int n);

// Maximize the Holevo quantity of the (projective or weak) ensemble over all
// measurement directions: grid scan plus Nelder-Mead restarts from the five
// best grid points. Ties prefer the lexicographically largest (z3, z2, z1).
Optimum maximize_holevo_numeric(const CorrelationTriple& c,
                                const OptimizerConfig& cfg);

// Minimize the conditional entropy over all measurement directions; for
// Bell-diagonal states 1 - maximize_holevo_numeric.
Optimum minimize_conditional_entropy_numeric(const CorrelationTriple& c,
                                             const OptimizerConfig& cfg);

}  // namespace holevo
