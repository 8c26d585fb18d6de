#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "nuqc/errors.hpp"
#include "nuqc/units.hpp"
#include "test_support.hpp"

using namespace nuqc;
using nuqc::testing::uniform;

TEST_CASE("natural_length_to_meters") {
  CHECK(units::natural_length_to_meters(0.0) == 0.0);
  CHECK(units::natural_length_to_meters(1.0 / 1.973269804e-7) == doctest::Approx(1.0).epsilon(1e-15));

  // Daya Bay oscillation length 4 pi E / dm2 (E = 2 MeV, dm2 = 2.42e-3 eV^2).
  const double l = units::natural_length_to_meters(4.0 * std::numbers::pi * 2e6 / 2.42e-3);
  CHECK(std::abs(l - 2049.5) / 2049.5 < 1e-3);

  CHECK_THROWS_AS(units::natural_length_to_meters(std::numeric_limits<double>::quiet_NaN()),
                  InvalidArgument);
  CHECK_THROWS_AS(units::natural_length_to_meters(std::numeric_limits<double>::infinity()),
                  InvalidArgument);
}

TEST_CASE("natural_length_to_meters is additive") {
  for (int i = 0; i < 200; ++i) {
    const double a = uniform(-1e9, 1e9);
    const double b = uniform(-1e9, 1e9);
    const double lhs = units::natural_length_to_meters(a + b);
    const double rhs = units::natural_length_to_meters(a) + units::natural_length_to_meters(b);
    CHECK(std::abs(lhs - rhs) <= 4 * std::numeric_limits<double>::epsilon() *
                                      (std::abs(a) + std::abs(b)) * units::kHbarC);
  }
}

TEST_CASE("phase_argument examples") {
  CHECK(units::phase_argument(2.42e-3, 0.0, 2e6) == 0.0);
  CHECK(units::phase_argument(-7.0, 0.0, 1.0) == 0.0);

  const double pi = std::numbers::pi;
  CHECK(std::abs(units::phase_argument(2.42e-3, 2049.5, 2e6) - pi) / pi < 1e-3);
  CHECK(std::abs(units::phase_argument(2.32e-3, 5.3444e5, 5e8) - pi) / pi < 1e-3);
}

TEST_CASE("phase_argument domain errors") {
  CHECK_THROWS_AS(units::phase_argument(1e-3, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(units::phase_argument(1e-3, 1.0, -5.0), DomainError);
  CHECK_THROWS_AS(units::phase_argument(1e-3, -1.0, 1e6), DomainError);
}

TEST_CASE("phase_argument scales linearly in x and dm2, inversely in E") {
  for (int i = 0; i < 200; ++i) {
    const double dm2 = uniform(1e-5, 1e-2);
    const double x = uniform(1.0, 1e7);
    const double e = uniform(1e5, 1e10);
    const double k = uniform(0.1, 10.0);
    const double base = units::phase_argument(dm2, x, e);
    CHECK(units::phase_argument(dm2, k * x, e) == doctest::Approx(k * base).epsilon(1e-13));
    CHECK(units::phase_argument(k * dm2, x, e) == doctest::Approx(k * base).epsilon(1e-13));
    CHECK(units::phase_argument(dm2, x, k * e) == doctest::Approx(base / k).epsilon(1e-13));
  }
}

TEST_CASE("energy_to_wavenumber") {
  CHECK(units::energy_to_wavenumber(units::kHbarC) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(units::energy_to_wavenumber(std::numeric_limits<double>::infinity()),
                  InvalidArgument);
}
