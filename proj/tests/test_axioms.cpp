#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

#include "dagger/axioms.hpp"
#include "dagger/io.hpp"
#include "test_helpers.hpp"

using namespace dagger;

namespace {

// F ↦ σz·F·σz, a unital map that is not a derivation.
Derivation conjugation_map() {
  const Operator t = testutil::pauli_z();
  Derivation delta;
  delta.algebra_dim = 2;
  delta.matrix = Eigen::kroneckerProduct(t.transpose(), t);
  return delta;
}

}  // namespace

TEST_CASE("random operators are deterministic in (spec, seed)") {
  for (Ensemble ensemble :
       {Ensemble::general_gaussian, Ensemble::hermitian_gaussian,
        Ensemble::unitary_conjugated_diagonal}) {
    const RandomOperatorSpec spec{5, ensemble, 0.7};
    CHECK(testutil::bitwise_equal(random_operator(spec, 99),
                                  random_operator(spec, 99)));
  }
}

TEST_CASE("hermitian_gaussian draws are exactly Hermitian") {
  const Operator h =
      random_operator({7, Ensemble::hermitian_gaussian, 1.0}, 3);
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("general_gaussian entry variance matches the convention") {
  // Monte-Carlo check that E|entry|² = 1 at scale 1.
  const RandomOperatorSpec spec{8, Ensemble::general_gaussian, 1.0};
  double sum = 0.0;
  long count = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const Operator g = random_operator(spec, seed);
    sum += g.cwiseAbs2().sum();
    count += g.size();
  }
  const double mean = sum / static_cast<double>(count);
  CHECK(mean >= 0.9);
  CHECK(mean <= 1.1);
}

TEST_CASE("involution identities are exact on Pauli inputs") {
  const auto reports = check_involution(testutil::pauli_x(),
                                        testutil::pauli_y(), Complex(0, 2));
  REQUIRE(reports.size() == 4);
  for (const AxiomReport& report : reports) {
    CHECK(report.passed);
    CHECK(report.max_residual == 0.0);
    CHECK_FALSE(report.witness.has_value());
  }
}

TEST_CASE("involution identities are exact on the identity") {
  const Operator id = Operator::Identity(3, 3);
  for (const AxiomReport& report :
       check_involution(id, id, Complex(1, 0))) {
    CHECK(report.passed);
    CHECK(report.max_residual == 0.0);
  }
}

TEST_CASE("involution rejects mismatched dimensions") {
  CHECK_THROWS_AS(check_involution(testutil::pauli_x(),
                                   Operator::Identity(3, 3), Complex(1, 0)),
                  DimensionMismatchError);
}

TEST_CASE("cstar identities hold exactly for a Pauli operator") {
  for (const AxiomReport& report : check_cstar_identity(testutil::pauli_x())) {
    CHECK(report.passed);
    CHECK(report.max_residual <= 1e-15);
  }
}

TEST_CASE("cstar identities pass on the nilpotent under the operator norm") {
  for (const AxiomReport& report :
       check_cstar_identity(testutil::nilpotent2())) {
    CHECK(report.passed);
  }
}

TEST_CASE("spectral-radius variant fails on the nilpotent counterexample") {
  // ‖A†A‖ = 1 while ‖A‖² = 0 when the norm is the spectral radius; this is
  // the shipped regression fixture for the norm-definition mismatch.
  const auto reports = check_cstar_identity(testutil::nilpotent2(),
                                            ToleranceConfig{},
                                            NormKind::spectral_radius);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].axiom_id == AxiomId::norm_adjoint);
  CHECK(reports[0].passed);  // 0 = 0 survives even the wrong norm
  CHECK(reports[1].axiom_id == AxiomId::norm_cstar);
  CHECK_FALSE(reports[1].passed);
  CHECK(reports[1].max_residual == doctest::Approx(1.0));
  REQUIRE(reports[1].witness.has_value());
  const io::json witness = io::parse_json_text(*reports[1].witness);
  CHECK(witness.contains("a"));
}

TEST_CASE("leibniz residual is exactly zero for a commutator derivation") {
  const Derivation delta = inner_derivation(testutil::pauli_z(), 1.0);
  const AxiomReport report =
      check_leibniz(delta, testutil::pauli_x(), testutil::pauli_y());
  CHECK(report.passed);
  CHECK(report.max_residual == 0.0);
}

TEST_CASE("leibniz forces derivations to vanish on the identity") {
  const Derivation delta = inner_derivation(testutil::pauli_z(), 1.0);
  const Operator id = Operator::Identity(2, 2);
  const AxiomReport report = check_leibniz(delta, id, id);
  CHECK(report.passed);
  CHECK(report.max_residual == 0.0);
}

TEST_CASE("the conjugation map fails the Leibniz rule with a witness") {
  const Operator id = Operator::Identity(2, 2);
  const AxiomReport report = check_leibniz(conjugation_map(), id, id);
  CHECK_FALSE(report.passed);
  CHECK(report.witness.has_value());
}

TEST_CASE("linearity of derivation superoperators") {
  const Derivation delta =
      inner_derivation(testutil::random_hermitian(4, 17), 1.0);
  const AxiomReport report = check_linearity(
      delta, testutil::random_general(4, 18), testutil::random_general(4, 19),
      Complex(0.3, -1.1), Complex(2.0, 0.5));
  CHECK(report.passed);
  CHECK(report.max_residual <= 1e-12);
}

TEST_CASE("axiom sweep: 500 seeded Ginibre pairs at d = 8 pass at 1e-10") {
  SweepConfig cfg;
  cfg.spec = {8, Ensemble::general_gaussian, 1.0};
  cfg.trials = 500;
  cfg.seed = 7;
  const auto reports = run_axiom_sweep(cfg);
  REQUIRE(reports.size() == 8);
  for (const AxiomReport& report : reports) {
    CHECK(report.passed);
    CHECK(report.trials == 500);
    CHECK_FALSE(report.witness.has_value());
  }
}

TEST_CASE("axiom sweep is deterministic and thread-count independent") {
  SweepConfig cfg;
  cfg.spec = {6, Ensemble::general_gaussian, 1.0};
  cfg.trials = 64;
  cfg.seed = 123;
  cfg.max_threads = 1;
  const auto serial = run_axiom_sweep(cfg);
  cfg.max_threads = 4;
  const auto parallel = run_axiom_sweep(cfg);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].axiom_id == parallel[k].axiom_id);
    CHECK(serial[k].passed == parallel[k].passed);
    CHECK(serial[k].max_residual == parallel[k].max_residual);
  }
}

TEST_CASE("axiom sweep validates its configuration") {
  SweepConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_axiom_sweep(cfg), InvalidArgumentError);
  cfg.trials = 1;
  cfg.spec.scale = -1.0;
  CHECK_THROWS_AS(run_axiom_sweep(cfg), InvalidArgumentError);
}
