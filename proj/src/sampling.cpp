#include "holevo/sampling.hpp"

namespace holevo {

CorrelationTriple sample_physical_triple(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    const CorrelationTriple c{unit(rng), unit(rng), unit(rng)};
    if (is_physical(c)) return c;  // acceptance ratio 1/3
  }
}

UnitaryParams sample_unitary_params(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const double t = gauss(rng), y1 = gauss(rng), y2 = gauss(rng),
                 y3 = gauss(rng);
    const double n = std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
    if (n > 1e-6) return UnitaryParams::normalized(t, y1, y2, y3);
  }
}

MeasurementDirection sample_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Eigen::Vector3d v{gauss(rng), gauss(rng), gauss(rng)};
    if (v.norm() > 1e-6) return MeasurementDirection::normalized(v);
  }
}

}  // namespace holevo
