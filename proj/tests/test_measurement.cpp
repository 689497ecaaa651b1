#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "holevo/correlations.hpp"
#include "holevo/measurement.hpp"
#include "holevo/sampling.hpp"
#include "test_util.hpp"

using namespace holevo;

namespace {

// Explicit-operator route for a projective measurement: apply I (x) V Pk V+
// to the full state, take probabilities and partial traces numerically.
MeasuredEnsemble explicit_projective(const CorrelationTriple& c,
                                     const UnitaryParams& u) {
  const Eigen::Matrix4cd rho = bell_diagonal(c);
  const Eigen::Matrix2cd v = unitary_matrix(u);
  MeasuredEnsemble out{MeasurementFamily::Projective, {}};
  for (int k = 0; k < 2; ++k) {
    Eigen::Matrix2cd pk = Eigen::Matrix2cd::Zero();
    pk(k, k) = 1.0;
    const Eigen::Matrix4cd op =
        kron(Eigen::Matrix2cd::Identity(), v * pk * v.adjoint());
    const Eigen::Matrix4cd post = op * rho * op.adjoint();
    const double prob = post.trace().real();
    out.outcomes[k] =
        Outcome{prob, reduced_state(post, Subsystem::A) / prob};
  }
  return out;
}

// Same for the weak operators P(+-x) built directly from V.
MeasuredEnsemble explicit_weak(const CorrelationTriple& c,
                               const UnitaryParams& u, const WeakStrength& x) {
  const Eigen::Matrix4cd rho = bell_diagonal(c);
  const Eigen::Matrix2cd v = unitary_matrix(u);
  Eigen::Matrix2cd p0 = Eigen::Matrix2cd::Zero(), p1 = Eigen::Matrix2cd::Zero();
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const Eigen::Matrix2cd b0 = v * p0 * v.adjoint();
  const Eigen::Matrix2cd b1 = v * p1 * v.adjoint();
  const double s = x.strength();
  const std::array<Eigen::Matrix2cd, 2> ops{
      std::sqrt(0.5 * (1.0 - s)) * b0 + std::sqrt(0.5 * (1.0 + s)) * b1,
      std::sqrt(0.5 * (1.0 + s)) * b0 + std::sqrt(0.5 * (1.0 - s)) * b1};
  MeasuredEnsemble out{MeasurementFamily::Weak, {}};
  for (int k = 0; k < 2; ++k) {
    const Eigen::Matrix4cd op = kron(Eigen::Matrix2cd::Identity(), ops[k]);
    const Eigen::Matrix4cd post = op * rho * op.adjoint();
    const double prob = post.trace().real();
    out.outcomes[k] =
        Outcome{prob, reduced_state(post, Subsystem::A) / prob};
  }
  return out;
}

}  // namespace

TEST_CASE("direction_from_unitary closed-form values") {
  const auto e3 = direction_from_unitary(UnitaryParams(1, 0, 0, 0));
  CHECK((e3.z() - Eigen::Vector3d(0, 0, 1)).norm() < 1e-15);

  const auto me3 = direction_from_unitary(UnitaryParams(0, 1, 0, 0));
  CHECK((me3.z() - Eigen::Vector3d(0, 0, -1)).norm() < 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  const auto e2 = direction_from_unitary(UnitaryParams(r, r, 0, 0));
  CHECK((e2.z() - Eigen::Vector3d(0, 1, 0)).norm() < 1e-12);
}

TEST_CASE("direction_from_unitary always lands on the unit sphere") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const auto z = direction_from_unitary(sample_unitary_params(rng));
    CHECK(std::abs(z.z().squaredNorm() - 1.0) < 1e-12);
  }
}

TEST_CASE("UnitaryParams and MeasurementDirection validate their norm") {
  CHECK_THROWS_AS(UnitaryParams(1.0, 0.5, 0, 0), std::invalid_argument);
  CHECK_NOTHROW(UnitaryParams::normalized(1.0, 0.5, 0, 0));
  CHECK_THROWS_AS(MeasurementDirection({1.0, 1.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeakStrength(0.0), std::invalid_argument);
  CHECK_THROWS_AS(WeakStrength(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(WeakStrength(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("projective_ensemble structure") {
  const MeasurementDirection zhat({0.0, 0.0, 1.0});
  const auto flat = projective_ensemble({0, 0, 0}, zhat);
  for (const auto& o : flat.outcomes) {
    CHECK(o.probability == doctest::Approx(0.5));
    CHECK(testutil::max_abs_diff(o.state, 0.5 * Eigen::Matrix2cd::Identity()) <
          1e-15);
  }

  // Along e3 the conditional Bloch vectors are +-(0, 0, c3).
  const CorrelationTriple c{0.5, 0.3, 0.1};
  const auto e = projective_ensemble(c, zhat);
  CHECK(e.outcomes[0].state(0, 0).real() == doctest::Approx(0.5 * 1.1));
  CHECK(e.outcomes[1].state(0, 0).real() == doctest::Approx(0.5 * 0.9));

  // Along e1 the conditional states are (I +- 0.5 s1)/2.
  const auto ex = projective_ensemble(c, MeasurementDirection({1, 0, 0}));
  const Eigen::Matrix2cd want =
      0.5 * (Eigen::Matrix2cd::Identity() + 0.5 * pauli(1));
  CHECK(testutil::max_abs_diff(ex.outcomes[0].state, want) < 1e-15);
  e.validate();
  ex.validate();
}

TEST_CASE("projective_ensemble equals the explicit-operator route") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 1000; ++i) {
    const CorrelationTriple c = sample_physical_triple(rng);
    const UnitaryParams u = sample_unitary_params(rng);
    const auto closed = projective_ensemble(c, direction_from_unitary(u));
    const auto explicit_ = explicit_projective(c, u);
    for (int k = 0; k < 2; ++k) {
      CHECK(std::abs(closed.outcomes[k].probability -
                     explicit_.outcomes[k].probability) < 1e-12);
      CHECK(trace_distance(closed.outcomes[k].state,
                           explicit_.outcomes[k].state) < 1e-10);
    }
  }
}

TEST_CASE("weak_operators completeness and limits") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> xdist(0.01, 8.0);
  for (int i = 0; i < 200; ++i) {
    const MeasurementDirection z = sample_direction(rng);
    const WeakStrength x(xdist(rng));
    const auto [pp, pm] = weak_operators(x, z);
    CHECK((pp.adjoint() * pp + pm.adjoint() * pm -
           Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }

  // x -> inf: P(+x) converges to the projector onto the -1 eigenstate of
  // z.sigma and P(-x) to the +1 projector, so the pair realizes the
  // projective measurement.
  const MeasurementDirection zhat({0.0, 0.0, 1.0});
  const auto [pp, pm] = weak_operators(WeakStrength(20.0), zhat);
  Eigen::Matrix2cd pi0 = Eigen::Matrix2cd::Zero(), pi1 = Eigen::Matrix2cd::Zero();
  pi0(0, 0) = 1.0;
  pi1(1, 1) = 1.0;
  CHECK(testutil::max_abs_diff(pp, pi1) < 1e-8);
  CHECK(testutil::max_abs_diff(pm, pi0) < 1e-8);

  // x -> 0+: both operators approach I/sqrt(2).
  const auto [qp, qm] = weak_operators(WeakStrength(1e-12), zhat);
  const Eigen::Matrix2cd half =
      Eigen::Matrix2cd::Identity() / std::sqrt(2.0);
  CHECK(testutil::max_abs_diff(qp, half) < 1e-10);
  CHECK(testutil::max_abs_diff(qm, half) < 1e-10);
}

TEST_CASE("weak_ensemble sign convention and projective limit") {
  const CorrelationTriple c{0.5, 0.3, 0.1};
  const MeasurementDirection zhat({0.0, 0.0, 1.0});
  const WeakStrength x(1.0);

  // Outcome 0 (+x) carries Bloch vector -(0, 0, c3 tanh 1).
  const auto e = weak_ensemble(c, zhat, x);
  const double b3 = 0.1 * std::tanh(1.0);
  CHECK(e.outcomes[0].state(0, 0).real() == doctest::Approx(0.5 * (1 - b3)));
  CHECK(e.outcomes[1].state(0, 0).real() == doctest::Approx(0.5 * (1 + b3)));
  e.validate();

  // Strong limit matches the projective ensemble up to outcome order.
  std::mt19937_64 rng(303);
  for (int i = 0; i < 50; ++i) {
    const CorrelationTriple cr = sample_physical_triple(rng);
    const MeasurementDirection z = sample_direction(rng);
    const auto strong = weak_ensemble(cr, z, WeakStrength(20.0));
    const auto proj = projective_ensemble(cr, z);
    CHECK(trace_distance(strong.outcomes[0].state, proj.outcomes[1].state) <
          1e-8);
    CHECK(trace_distance(strong.outcomes[1].state, proj.outcomes[0].state) <
          1e-8);
  }
}

TEST_CASE("weak_ensemble equals the explicit-operator route") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> xdist(0.05, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const CorrelationTriple c = sample_physical_triple(rng);
    const UnitaryParams u = sample_unitary_params(rng);
    const WeakStrength x(xdist(rng));
    const auto closed = weak_ensemble(c, direction_from_unitary(u), x);
    const auto explicit_ = explicit_weak(c, u, x);
    for (int k = 0; k < 2; ++k) {
      CHECK(std::abs(closed.outcomes[k].probability -
                     explicit_.outcomes[k].probability) < 1e-12);
      CHECK(trace_distance(closed.outcomes[k].state,
                           explicit_.outcomes[k].state) < 1e-10);
    }
  }
}

TEST_CASE("holevo_of_ensemble") {
  // Identical states carry no information.
  const auto flat = projective_ensemble({0, 0, 0},
                                        MeasurementDirection({0, 0, 1}));
  CHECK(holevo_of_ensemble(flat) == doctest::Approx(0.0));

  // Optimal axis for (0.9, 0, 0); frozen value 1 - H2(0.95).
  const auto e =
      projective_ensemble({0.9, 0, 0}, MeasurementDirection({1, 0, 0}));
  CHECK(holevo_of_ensemble(e) ==
        doctest::Approx(0.7136030428840436).epsilon(1e-12));
  CHECK(holevo_of_ensemble(e) ==
        doctest::Approx(maximal_holevo({0.9, 0, 0})).epsilon(1e-12));

  // Weak Werner case against the closed form.
  const WeakStrength x(0.25);
  const auto w = weak_ensemble({-0.5, -0.5, -0.5},
                               MeasurementDirection({0, 0, 1}), x);
  CHECK(holevo_of_ensemble(w) ==
        doctest::Approx(1.0 - binary_entropy(0.5 * (1 + 0.5 * x.strength())))
            .epsilon(1e-12));
  CHECK(holevo_of_ensemble(w) ==
        doctest::Approx(0.010844735661924343).epsilon(1e-10));
}

TEST_CASE("conditional_entropy") {
  // Pure conditional states.
  const auto pure =
      projective_ensemble({1.0, 1.0, -1.0}, MeasurementDirection({1, 0, 0}));
  CHECK(conditional_entropy(pure) == doctest::Approx(0.0).epsilon(1e-12));

  const auto e =
      projective_ensemble({0.9, 0, 0}, MeasurementDirection({1, 0, 0}));
  CHECK(conditional_entropy(e) ==
        doctest::Approx(binary_entropy(0.95)).epsilon(1e-13));

  // holevo = S(average) - conditional entropy; average is I/2 here.
  CHECK(holevo_of_ensemble(e) ==
        doctest::Approx(1.0 - conditional_entropy(e)).epsilon(1e-13));
}

TEST_CASE("holevo quantity is nondecreasing in the weak strength") {
  std::mt19937_64 rng(550);
  for (int i = 0; i < 20; ++i) {
    const CorrelationTriple c = sample_physical_triple(rng);
    const MeasurementDirection z = sample_direction(rng);
    double prev = 0.0;
    for (double x = 0.1; x < 6.0; x *= 1.7) {
      const double h = holevo_of_ensemble(weak_ensemble(c, z, WeakStrength(x)));
      CHECK(h >= prev - 1e-12);
      prev = h;
    }
    CHECK(holevo_of_ensemble(projective_ensemble(c, z)) >= prev - 1e-12);
  }
}
