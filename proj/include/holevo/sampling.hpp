#pragma once

#include <random>

#include "holevo/measurement.hpp"
#include "holevo/qstate.hpp"

namespace holevo {

// Deterministic samplers shared by the verification suites and tests.

// Uniform over the Bell polytope (rejection from the cube [-1,1]^3).
CorrelationTriple sample_physical_triple(std::mt19937_64& rng);

// Uniform over the 3-sphere of (t, y1, y2, y3).
UnitaryParams sample_unitary_params(std::mt19937_64& rng);

// Uniform over the unit sphere.
MeasurementDirection sample_direction(std::mt19937_64& rng);

}  // namespace holevo
