#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nuqc/errors.hpp"
#include "nuqc/markers.hpp"
#include "nuqc/oscillation_models.hpp"
#include "nuqc/validation.hpp"
#include "test_support.hpp"

using namespace nuqc;
using nuqc::testing::uniform;

TEST_CASE("bound constants") {
  CHECK(kNaqcBound == std::sqrt(6.0));
  CHECK(kChshBound == 1.0);
}

TEST_CASE("naqc_from_probability") {
  CHECK(naqc_from_probability(0.5) == 3.0);
  CHECK(naqc_from_probability(0.0) == 2.0);
  CHECK(naqc_from_probability(1.0) == 2.0);
  CHECK(std::abs(naqc_from_probability(0.916) - 2.5548) < 1e-4);
  CHECK(naqc_from_probability(1.0 + 5e-15) == 2.0);
  CHECK(naqc_from_probability(-5e-15) == 2.0);
  CHECK_THROWS_AS(naqc_from_probability(1.0 + 1e-12), DomainError);
  CHECK_THROWS_AS(naqc_from_probability(-0.1), DomainError);
  CHECK_THROWS_AS(naqc_from_probability(std::nan("")), DomainError);
}

TEST_CASE("chsh_from_probability") {
  CHECK(chsh_from_probability(0.5) == 2.0);
  CHECK(chsh_from_probability(0.0) == 1.0);
  CHECK(std::abs(chsh_from_probability(0.958) - 1.160944) < 1e-6);
  CHECK(std::abs(chsh_from_probability(0.525) - 1.9975) < 1e-6);
  CHECK_THROWS_AS(chsh_from_probability(2.0), DomainError);
}

TEST_CASE("markers are symmetric under p <-> 1 - p") {
  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    CHECK(naqc_from_probability(p) == doctest::Approx(naqc_from_probability(1.0 - p)).epsilon(1e-15));
    CHECK(chsh_from_probability(p) == doctest::Approx(chsh_from_probability(1.0 - p)).epsilon(1e-15));
  }
}

TEST_CASE("MarkerValues invariants") {
  for (int i = 0; i <= 500; ++i) {
    const double p = i / 500.0;
    const MarkerValues v = MarkerValues::from_probability(p);
    CHECK(std::abs(v.naqc - (2.0 + 2.0 * std::sqrt(p * (1 - p)))) < 1e-12);
    CHECK(std::abs(v.chsh - (1.0 + 4.0 * p * (1 - p))) < 1e-12);
    CHECK(v.naqc >= 2.0);
    CHECK(v.naqc <= 3.0);
    CHECK(v.chsh >= 1.0);
    CHECK(v.chsh <= 2.0);
    CHECK(v.naqc_violated == (v.naqc > std::sqrt(6.0)));
    CHECK(v.chsh_violated == (v.chsh > 1.0));
    // NAQC is the stronger marker.
    if (v.naqc_violated) CHECK(v.chsh_violated);
  }
}

TEST_CASE("flavor_density_matrix") {
  const TwoQubitState survival_only = flavor_density_matrix(1.0, 0.0);
  Matrix4c expected = Matrix4c::Zero();
  expected(2, 2) = 1.0;
  CHECK((survival_only.matrix() - expected).norm() < 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(naqc_steering(flavor_density_matrix(r, r)) - 3.0) < 1e-12);

  // Support only on |01>, |10>.
  const TwoQubitState rho = flavor_density_matrix(std::sqrt(0.3), std::polar(std::sqrt(0.7), 1.1));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(rho.matrix()(0, i)) == 0.0);
    CHECK(std::abs(rho.matrix()(3, i)) == 0.0);
  }

  CHECK_THROWS_AS(flavor_density_matrix(1.0, 0.1), InvalidAmplitudes);
  CHECK_THROWS_AS(flavor_density_matrix(0.0, 0.0), InvalidAmplitudes);
}

TEST_CASE("oracle CHSH at the Daya Bay oscillation minimum") {
  const OscillationParams db{0.084, 2.42e-3};
  const double l = oscillation_length(db, 2e6);
  const FlavorAmplitudes a = plane_wave_amplitudes(db, 2e6, l / 2);
  const TwoQubitState rho = flavor_density_matrix(a.survival, a.transition);
  CHECK(std::abs(chsh_m(rho) - 1.3078) < 1e-4);
  // Plane-wave amplitudes carry a complex product; CHSH is phase-blind.
  CHECK(std::abs(chsh_m(rho) - chsh_from_probability(std::norm(a.survival))) < 1e-12);
}

TEST_CASE("naqc_violation_threshold") {
  const ProbabilityWindow w = naqc_violation_threshold();
  CHECK(std::abs(w.low - 0.053358) < 1e-6);
  CHECK(std::abs(w.high - 0.946642) < 1e-6);
  CHECK(naqc_from_probability(w.low) == doctest::Approx(kNaqcBound).epsilon(1e-14));
  CHECK(naqc_from_probability(w.high) == doctest::Approx(kNaqcBound).epsilon(1e-14));
  CHECK_FALSE(w.contains(0.958));  // Daya Bay decoherent limit
  CHECK(w.contains(0.525));        // MINOS decoherent limit
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    CHECK(w.contains(p) == MarkerValues::from_probability(p).naqc_violated);
  }
}

TEST_CASE("closed-form NAQC equals the steering oracle on real-product states") {
  for (double p : oracle_probabilities()) {
    const TwoQubitState rho = flavor_density_matrix(std::sqrt(p), std::sqrt(1.0 - p));
    CHECK(std::abs(naqc_steering(rho) - naqc_from_probability(p)) < 1e-12);
  }
}

TEST_CASE("closed-form CHSH equals the correlation-matrix oracle for any phase") {
  for (int i = 0; i < 500; ++i) {
    const double p = uniform(0.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const TwoQubitState rho = flavor_density_matrix(std::sqrt(p), std::polar(std::sqrt(1.0 - p), phi));
    CHECK(std::abs(chsh_m(rho) - chsh_from_probability(p)) < 1e-12);
  }
}

TEST_CASE("run_validation passes and honours a tolerance override") {
  for (const CheckResult& r : run_validation()) {
    INFO(r.name << " max_error=" << r.max_error);
    CHECK(r.passed);
  }
  ValidationOptions impossible;
  impossible.tolerance = 1e-20;
  bool any_failed = false;
  for (const CheckResult& r : run_validation(impossible)) any_failed = any_failed || !r.passed;
  CHECK(any_failed);
}
