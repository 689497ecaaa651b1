#include "holevo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "holevo/channels.hpp"
#include "holevo/correlations.hpp"
#include "holevo/optimizer.hpp"
#include "holevo/sampling.hpp"
#include "holevo/sweep.hpp"

namespace holevo {

namespace {

std::string triple_str(const CorrelationTriple& c) {
  std::ostringstream os;
  os << "c=(" << format_number(c.c1) << ", " << format_number(c.c2) << ", "
     << format_number(c.c3) << ")";
  return os.str();
}

// Closed-form reference with the fault hook applied to C. fault != 1 must be
// caught by the oracle-agreement suite.
double faulted_closed_form(double big_c, double scale_s, double fault) {
  const double c_eff = std::clamp(big_c * fault, 0.0, 1.0) * scale_s;
  return 1.0 - binary_entropy(0.5 * (1.0 + c_eff));
}

struct SuiteRecorder {
  SuiteResult result;

  explicit SuiteRecorder(std::string name)
      : result{std::move(name), true, 0, ""} {}

  void check(bool ok, const std::string& detail) {
    ++result.cases;
    if (!ok && result.passed) {
      result.passed = false;
      result.first_failure = detail;
    }
  }
};

SuiteResult oracle_agreement(const VerifyOptions& opts) {
  SuiteRecorder rec("oracle_agreement");
  std::mt19937_64 rng(opts.seed);
  OptimizerConfig cfg;
  cfg.grid_points = opts.grid_points;
  cfg.threads = opts.threads;

  const double xs[] = {0.25, 1.0, 2.5};
  for (int i = 0; i < opts.samples; ++i) {
    const CorrelationTriple c = sample_physical_triple(rng);
    const double big_c = c_max(c);

    cfg.weak.reset();
    double expected = faulted_closed_form(big_c, 1.0, opts.fault_scale_c);
    double got = maximize_holevo_numeric(c, cfg).value;
    std::ostringstream detail;
    detail << triple_str(c) << " family=projective expected="
           << format_number(expected) << " got=" << format_number(got);
    rec.check(std::abs(expected - got) < 1e-6, detail.str());

    for (double xv : xs) {
      const WeakStrength x(xv);
      cfg.weak = x;
      expected = faulted_closed_form(big_c, x.strength(), opts.fault_scale_c);
      got = maximize_holevo_numeric(c, cfg).value;
      std::ostringstream d2;
      d2 << triple_str(c) << " family=weak x=" << format_number(xv)
         << " expected=" << format_number(expected)
         << " got=" << format_number(got);
      rec.check(std::abs(expected - got) < 1e-6, d2.str());
    }
  }
  return rec.result;
}

SuiteResult channel_invariance(const VerifyOptions& opts) {
  SuiteRecorder rec("channel_invariance");
  std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL);
  const WeakStrength x_lo(0.5), x_hi(2.5);

  struct Case {
    ChannelKind kind;
    int axis;  // the correlation component the channel leaves untouched
  };
  const Case cases[] = {{ChannelKind::BF, 0},
                        {ChannelKind::PF, 2},
                        {ChannelKind::BPF, 1}};

  auto quantities = [&](const CorrelationTriple& c) {
    return std::array<double, 6>{maximal_holevo(c),
                                 classical_correlation(c),
                                 weak_maximal_holevo(c, x_lo),
                                 super_classical_correlation(c, x_lo),
                                 weak_maximal_holevo(c, x_hi),
                                 super_classical_correlation(c, x_hi)};
  };

  const int triples = std::max(1, std::min(opts.samples, 25));
  for (const Case& cs : cases) {
    for (int i = 0; i < triples; ++i) {
      // Permute a random physical triple so the untouched axis strictly
      // dominates; coordinate permutations preserve the Bell polytope.
      CorrelationTriple c = sample_physical_triple(rng);
      std::array<double, 3> v{c.c1, c.c2, c.c3};
      const auto it = std::max_element(
          v.begin(), v.end(),
          [](double a, double b) { return std::abs(a) < std::abs(b); });
      std::swap(v[cs.axis], *it);
      c = {v[0], v[1], v[2]};
      const auto base = quantities(c);

      for (double p = 0.1; p < 0.95; p += 0.1) {
        const ChannelSpec spec{cs.kind, p, 0.0};
        const auto moved = quantities(transformed_c(c, spec));
        for (std::size_t q = 0; q < base.size(); ++q) {
          std::ostringstream detail;
          detail << triple_str(c) << " channel=" << static_cast<int>(cs.kind)
                 << " p=" << format_number(p) << " quantity=" << q
                 << " expected=" << format_number(base[q])
                 << " got=" << format_number(moved[q]);
          rec.check(std::abs(base[q] - moved[q]) <= 1e-12, detail.str());
        }
      }
    }
  }

  // Werner states are invariant under all three flip channels.
  for (double z : {0.2, 0.5, 0.8, 1.0}) {
    const CorrelationTriple c = WernerParams::from_z(z).triple();
    const auto base = quantities(c);
    for (const Case& cs : cases) {
      for (double p = 0.1; p < 0.95; p += 0.2) {
        const auto moved = quantities(transformed_c(c, {cs.kind, p, 0.0}));
        for (std::size_t q = 0; q < base.size(); ++q) {
          std::ostringstream detail;
          detail << "werner z=" << format_number(z) << " channel="
                 << static_cast<int>(cs.kind) << " p=" << format_number(p)
                 << " quantity=" << q << " expected=" << format_number(base[q])
                 << " got=" << format_number(moved[q]);
          rec.check(std::abs(base[q] - moved[q]) <= 1e-12, detail.str());
        }
      }
    }
  }
  return rec.result;
}

SuiteResult depolarizing_equivalence(const VerifyOptions& opts) {
  SuiteRecorder rec("depolarizing_equivalence");
  std::mt19937_64 rng(opts.seed + 0x2545f4914f6cdd1dULL);
  std::uniform_real_distribution<double> pdist(1e-4, 0.7499);
  for (int i = 0; i < opts.samples; ++i) {
    const CorrelationTriple c = sample_physical_triple(rng);
    const MeasurementDirection z = sample_direction(rng);
    const double p = pdist(rng);
    const EquivalenceReport r = depolarize_then_project_equivalence(c, z, p);
    std::ostringstream detail;
    detail << triple_str(c) << " p=" << format_number(p)
           << " expected matched trace distance < 1e-10, got "
           << format_number(r.max_state_distance) << " (probability error "
           << format_number(r.max_probability_error) << ")";
    rec.check(r.max_state_distance < 1e-10 && r.max_probability_error < 1e-12,
              detail.str());
  }
  return rec.result;
}

SuiteResult kraus_completeness(const VerifyOptions& opts) {
  (void)opts;
  SuiteRecorder rec("kraus_completeness");
  auto check_spec = [&](const ChannelSpec& spec, const std::string& label) {
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (const auto& e : kraus_set(spec)) sum += e.adjoint() * e;
    const double dev =
        (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    rec.check(dev < 1e-12,
              label + " completeness deviation " + format_number(dev));
  };
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    check_spec({ChannelKind::BF, p, 0.0}, "BF p=" + format_number(p));
    check_spec({ChannelKind::PF, p, 0.0}, "PF p=" + format_number(p));
    check_spec({ChannelKind::BPF, p, 0.0}, "BPF p=" + format_number(p));
    check_spec({ChannelKind::DEPOL1, p, 0.0}, "DEPOL1 p=" + format_number(p));
    for (int g = 0; g <= 20; ++g) {
      const double gamma = g / 20.0;
      check_spec({ChannelKind::GAD, p, gamma},
                 "GAD p=" + format_number(p) + " gamma=" +
                     format_number(gamma));
    }
  }
  return rec.result;
}

SuiteResult weak_operator_properties(const VerifyOptions& opts) {
  SuiteRecorder rec("weak_operator_properties");
  std::mt19937_64 rng(opts.seed + 0x853c49e6748fea9bULL);
  std::uniform_real_distribution<double> xdist(0.05, 5.0);
  for (int i = 0; i < opts.samples; ++i) {
    const MeasurementDirection z = sample_direction(rng);
    const WeakStrength x(xdist(rng));
    const auto [pp, pm] = weak_operators(x, z);
    const double dev = (pp.adjoint() * pp + pm.adjoint() * pm -
                        Eigen::Matrix2cd::Identity())
                           .cwiseAbs()
                           .maxCoeff();
    rec.check(dev < 1e-12, "completeness deviation " + format_number(dev) +
                               " at x=" + format_number(x.x()));

    // Projective limit: P(+x) -> P1, P(-x) -> P0.
    const auto [qp, qm] = weak_operators(WeakStrength(20.0), z);
    const Eigen::Matrix2cd zs =
        z.z().x() * pauli(1) + z.z().y() * pauli(2) + z.z().z() * pauli(3);
    const Eigen::Matrix2cd p0 = 0.5 * (Eigen::Matrix2cd::Identity() + zs);
    const Eigen::Matrix2cd p1 = 0.5 * (Eigen::Matrix2cd::Identity() - zs);
    const double lim = std::max((qp - p1).cwiseAbs().maxCoeff(),
                                (qm - p0).cwiseAbs().maxCoeff());
    rec.check(lim < 1e-8, "projective-limit deviation " + format_number(lim));
  }
  return rec.result;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed; });
}

VerifyReport run_verification(const VerifyOptions& opts) {
  if (opts.samples < 1) {
    throw std::invalid_argument("verification requires samples >= 1");
  }
  VerifyReport report{opts.seed, opts.samples, {}};
  report.suites.push_back(oracle_agreement(opts));
  report.suites.push_back(channel_invariance(opts));
  report.suites.push_back(depolarizing_equivalence(opts));
  report.suites.push_back(kraus_completeness(opts));
  report.suites.push_back(weak_operator_properties(opts));
  return report;
}

}  // namespace holevo
