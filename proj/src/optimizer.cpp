#include "holevo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "holevo/correlations.hpp"

namespace holevo {

namespace {

enum class Sense { Maximize, Minimize };

struct Candidate {
  double value;
  Eigen::Vector3d z;
};

// Total order making the scan result independent of evaluation order: better
// objective first, ties broken toward the lexicographically largest
// (z3, z2, z1).
bool better(const Candidate& a, const Candidate& b, Sense sense) {
  if (a.value != b.value) {
    return sense == Sense::Maximize ? a.value > b.value : a.value < b.value;
  }
  if (a.z.z() != b.z.z()) return a.z.z() > b.z.z();
  if (a.z.y() != b.z.y()) return a.z.y() > b.z.y();
  return a.z.x() > b.z.x();
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

Eigen::Vector3d from_angles(double polar, double azimuth) {
  const double sp = std::sin(polar);
  Eigen::Vector3d v{sp * std::cos(azimuth), sp * std::sin(azimuth),
                    std::cos(polar)};
  return v.normalized();
}

std::pair<double, double> to_angles(const Eigen::Vector3d& z) {
  return {std::acos(std::clamp(z.z(), -1.0, 1.0)), std::atan2(z.y(), z.x())};
}

struct RefineResult {
  Candidate best;
  bool converged;
};

// Nelder-Mead on (polar, azimuth). The direction map is smooth and periodic,
// so the angles stay unconstrained; the simplex shrinks fast on the smooth
// objectives here and the spread test certifies convergence.
RefineResult nelder_mead(const std::function<double(const Eigen::Vector3d&)>& f,
                         const Eigen::Vector3d& start, double step,
                         int max_iters, double tol, Sense sense) {
  const double sign = sense == Sense::Maximize ? -1.0 : 1.0;
  auto cost = [&](const Eigen::Vector2d& a) {
    return sign * f(from_angles(a.x(), a.y()));
  };

  const auto [p0, a0] = to_angles(start);
  std::array<Eigen::Vector2d, 3> pts{Eigen::Vector2d{p0, a0},
                                     Eigen::Vector2d{p0 + step, a0},
                                     Eigen::Vector2d{p0, a0 + step}};
  std::array<double, 3> val{cost(pts[0]), cost(pts[1]), cost(pts[2])};

  auto order = [&] {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return val[a] < val[b]; });
    std::array<Eigen::Vector2d, 3> p2{pts[idx[0]], pts[idx[1]], pts[idx[2]]};
    std::array<double, 3> v2{val[idx[0]], val[idx[1]], val[idx[2]]};
    pts = p2;
    val = v2;
  };

  bool converged = false;
  order();
  for (int it = 0; it < max_iters; ++it) {
    if (std::abs(val[2] - val[0]) <= tol) {
      converged = true;
      break;
    }
    const Eigen::Vector2d centroid = 0.5 * (pts[0] + pts[1]);
    const Eigen::Vector2d refl = centroid + (centroid - pts[2]);
    const double frefl = cost(refl);
    if (frefl < val[0]) {
      const Eigen::Vector2d exp_ = centroid + 2.0 * (refl - centroid);
      const double fexp = cost(exp_);
      if (fexp < frefl) {
        pts[2] = exp_;
        val[2] = fexp;
      } else {
        pts[2] = refl;
        val[2] = frefl;
      }
    } else if (frefl < val[1]) {
      pts[2] = refl;
      val[2] = frefl;
    } else {
      const bool outside = frefl < val[2];
      const Eigen::Vector2d base = outside ? refl : pts[2];
      const Eigen::Vector2d contr = centroid + 0.5 * (base - centroid);
      const double fcontr = cost(contr);
      if (fcontr < (outside ? frefl : val[2])) {
        pts[2] = contr;
        val[2] = fcontr;
      } else {
        for (int k = 1; k < 3; ++k) {
          pts[k] = pts[0] + 0.5 * (pts[k] - pts[0]);
          val[k] = cost(pts[k]);
        }
      }
    }
    order();
  }
  if (max_iters == 0) converged = std::abs(val[2] - val[0]) <= tol;
  return {Candidate{sign * val[0], from_angles(pts[0].x(), pts[0].y())},
          converged};
}

Optimum optimize(const CorrelationTriple& c, const OptimizerConfig& cfg,
                 Sense sense) {
  cfg.validate();
  require_physical(c);

  auto objective = [&](const Eigen::Vector3d& zv) {
    const MeasurementDirection dir(zv);
    const MeasuredEnsemble e =
        cfg.weak ? weak_ensemble(c, dir, *cfg.weak) : projective_ensemble(c, dir);
    return sense == Sense::Maximize ? holevo_of_ensemble(e)
                                    : conditional_entropy(e);
  };

  const std::vector<MeasurementDirection> grid = sphere_grid(cfg.grid_points);

  // Scan the grid, keeping the 5 best points of each chunk; the merged
  // result is independent of the thread count because `better` is total.
  constexpr int kKeep = 5;
  const int threads =
      std::min<int>(resolve_threads(cfg.threads), cfg.grid_points);
  std::vector<std::vector<Candidate>> chunk_best(threads);
  {
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(grid.size(), lo + chunk);
        std::vector<Candidate>& best = chunk_best[t];
        for (std::size_t i = lo; i < hi; ++i) {
          const Eigen::Vector3d& zv = grid[i].z();
          Candidate cand{objective(zv), zv};
          best.push_back(cand);
          std::sort(best.begin(), best.end(),
                    [&](const Candidate& a, const Candidate& b) {
                      return better(a, b, sense);
                    });
          if (best.size() > kKeep) best.pop_back();
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }
  std::vector<Candidate> top;
  for (const auto& cb : chunk_best) top.insert(top.end(), cb.begin(), cb.end());
  std::sort(top.begin(), top.end(), [&](const Candidate& a, const Candidate& b) {
    return better(a, b, sense);
  });
  if (top.size() > kKeep) top.resize(kKeep);

  // Local refinement, restarted from each retained grid point.
  const double step =
      std::max(0.02, std::sqrt(4.0 * std::numbers::pi / cfg.grid_points));
  Candidate best = top.front();
  bool best_converged = false;
  bool first = true;
  for (const Candidate& seed : top) {
    const RefineResult r = nelder_mead(objective, seed.z, step,
                                       cfg.refine_iters, cfg.refine_tol, sense);
    const Candidate& cand = better(r.best, seed, sense) ? r.best : seed;
    if (first || better(cand, best, sense)) {
      best = cand;
      best_converged = r.converged;
      first = false;
    }
  }

  const MeasurementDirection dir = MeasurementDirection::normalized(best.z);
  return Optimum{best.value, dir, theta(c, dir), best_converged};
}

}  // namespace

void OptimizerConfig::validate() const {
  if (grid_points < 1000) {
    throw std::invalid_argument("OptimizerConfig.grid_points must be >= 1000");
  }
  if (refine_iters < 0) {
    throw std::invalid_argument("OptimizerConfig.refine_iters must be >= 0");
  }
  if (!(refine_tol > 0.0)) {
    throw std::invalid_argument("OptimizerConfig.refine_tol must be positive");
  }
}

double theta(const CorrelationTriple& c, const MeasurementDirection& z) {
  return c.as_vector().cwiseProduct(z.z()).norm();
}

std::vector<MeasurementDirection> sphere_grid(int n) {
  if (n < 1) throw std::invalid_argument("sphere_grid requires n >= 1");
  std::vector<MeasurementDirection> out;
  out.reserve(n);
  if (n == 1) {
    out.emplace_back(Eigen::Vector3d{0.0, 0.0, 1.0});
    return out;
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double zc = 1.0 - 2.0 * i / (n - 1.0);
    const double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double phi = golden * i;
    out.push_back(MeasurementDirection::normalized(
        {r * std::cos(phi), r * std::sin(phi), zc}));
  }
  return out;
}

Optimum maximize_holevo_numeric(const CorrelationTriple& c,
                                const OptimizerConfig& cfg) {
  return optimize(c, cfg, Sense::Maximize);
}

Optimum minimize_conditional_entropy_numeric(const CorrelationTriple& c,
                                             const OptimizerConfig& cfg) {
  return optimize(c, cfg, Sense::Minimize);
}

}  // namespace holevo
