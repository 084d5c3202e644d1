#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "shiftbell/angles.hpp"
#include "shiftbell/errors.hpp"

using namespace shiftbell;

TEST_CASE("sgn uses +1 at zero") {
  CHECK(sgn(0.5) == Sign::plus());
  CHECK(sgn(-0.2) == Sign::minus());
  CHECK(sgn(0.0) == Sign::plus());
  CHECK(sgn(-0.0) == Sign::plus());
  CHECK_THROWS_AS(sgn(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(sgn(INFINITY), DomainError);
}

TEST_CASE("heaviside is zero at zero") {
  CHECK(heaviside(1.0) == 1);
  CHECK(heaviside(-1.0) == 0);
  CHECK(heaviside(0.0) == 0);
  CHECK_THROWS_AS(heaviside(-INFINITY), DomainError);
}

TEST_CASE("sign and step complement each other away from zero") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(gen);
    if (x == 0.0) continue;
    CHECK((sgn(x) * sgn(-x)).value() == -1);
    CHECK(heaviside(x) + heaviside(-x) == 1);
  }
}

TEST_CASE("PolarAngle normalizes into [0, 2pi)") {
  CHECK(PolarAngle(0.0).value() == 0.0);
  CHECK(PolarAngle(kTwoPi).value() == 0.0);
  CHECK(PolarAngle(-kHalfPi).value() == doctest::Approx(1.5 * kPi));
  CHECK(PolarAngle(-1e-300).value() < kTwoPi);
  CHECK(PolarAngle::from_degrees(90.0).value() == doctest::Approx(kHalfPi));
  CHECK_THROWS_AS(PolarAngle(std::numeric_limits<double>::quiet_NaN()), DomainError);

  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(gen);
    const double v = PolarAngle(x).value();
    REQUIRE(v >= 0.0);
    REQUIRE(v < kTwoPi);
    // Adding a full turn is an identity up to rounding of x + 2pi.
    const double w = PolarAngle(x + kTwoPi).value();
    const double gap = std::fabs(v - w);
    CHECK(std::fmin(gap, kTwoPi - gap) < 1e-12);
  }
}

TEST_CASE("SeparationAngle rejects values outside [0, pi]") {
  CHECK_NOTHROW(SeparationAngle(0.0));
  CHECK_NOTHROW(SeparationAngle(kPi));
  CHECK_THROWS_AS(SeparationAngle(-1e-9), DomainError);
  CHECK_THROWS_AS(SeparationAngle(kPi + 1e-9), DomainError);
}

TEST_CASE("separation folds the difference") {
  CHECK(separation(PolarAngle(kHalfPi), PolarAngle(0.25 * kPi)).value() == doctest::Approx(0.25 * kPi));
  CHECK(separation(PolarAngle(0.0), PolarAngle(1.5 * kPi)).value() == doctest::Approx(kHalfPi));
  CHECK(separation(PolarAngle(1.234), PolarAngle(1.234)).value() == 0.0);

  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(gen);
    const double y = dist(gen);
    const double t = separation(PolarAngle(x), PolarAngle(y)).value();
    REQUIRE(t >= 0.0);
    REQUIRE(t <= kPi);
    CHECK(t == separation(PolarAngle(y), PolarAngle(x)).value());
    CHECK(t == doctest::Approx(separation(PolarAngle(x + kTwoPi), PolarAngle(y)).value()).epsilon(1e-12));
    // Same angle the long way: arccos of the dot product.
    CHECK(t == doctest::Approx(std::acos(std::clamp(std::cos(x - y), -1.0, 1.0))).epsilon(1e-6));
  }
}

TEST_CASE("resultant_sign") {
  CHECK(resultant_sign(PolarAngle(0), PolarAngle(0), Sign::plus(), PolarAngle(0)) == Sign::plus());
  CHECK(resultant_sign(PolarAngle(kPi), PolarAngle(0), Sign::plus(), PolarAngle(0)) == Sign::minus());
  // w = (cos pi/3 - cos 2pi/3, sin pi/3 - sin 2pi/3) = (1, 0).
  CHECK(resultant_sign(PolarAngle(0), PolarAngle(kPi / 3), Sign::minus(), PolarAngle(2 * kPi / 3)) == Sign::plus());

  SUBCASE("degenerate resultant") {
    CHECK_THROWS_AS(resultant_sign(PolarAngle(0), PolarAngle(1.0), Sign::minus(), PolarAngle(1.0)),
                    DegenerateResultantError);
    CHECK_FALSE(try_resultant_sign(PolarAngle(0), PolarAngle(0.0), Sign::plus(), PolarAngle(kPi)).has_value());
  }

  SUBCASE("vector addition commutes for c = +1") {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    for (int i = 0; i < 1000; ++i) {
      const PolarAngle b(dist(gen)), u(dist(gen)), v(dist(gen));
      const auto lhs = try_resultant_sign(b, u, Sign::plus(), v);
      const auto rhs = try_resultant_sign(b, v, Sign::plus(), u);
      REQUIRE(lhs.has_value() == rhs.has_value());
      if (lhs) CHECK(*lhs == *rhs);
    }
  }
}
