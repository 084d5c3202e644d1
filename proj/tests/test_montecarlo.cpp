#include <doctest.h>

#include <cmath>
#include <vector>

#include "shiftbell/errors.hpp"
#include "shiftbell/montecarlo.hpp"

using namespace shiftbell;

namespace {

std::vector<ProtocolSpec> all_protocols() {
  return {ProtocolSpec::plain(),        ProtocolSpec::fixed_shift(0.7), ProtocolSpec::random_shift(),
          ProtocolSpec::two_share(),    ProtocolSpec::adaptive(3),      ProtocolSpec::quantum()};
}

bool within_sigmas(const CorrelationEstimate& e, double expected, double sigmas = 5.0) {
  return std::fabs(e.mean - expected) <= std::fmax(sigmas * e.std_error, 1e-12);
}

}  // namespace

TEST_CASE("deterministic estimates") {
  const auto plain = estimate_correlation(ProtocolSpec::plain(), PolarAngle(0), PolarAngle(0), 100000, 1);
  CHECK(plain.mean == -1.0);
  CHECK(plain.std_error == 0.0);
  CHECK(plain.n == 100000);

  const auto shifted =
      estimate_correlation(ProtocolSpec::fixed_shift(kHalfPi), PolarAngle(0), PolarAngle(kPi / 8), 100000, 2);
  CHECK(shifted.mean == -1.0);
}

TEST_CASE("quantum reference at pi/2 is uncorrelated") {
  const auto e = estimate_correlation(ProtocolSpec::quantum(), PolarAngle(0), PolarAngle(kHalfPi), 1000000, 3);
  CHECK(within_sigmas(e, 0.0));
  CHECK(e.std_error == doctest::Approx(0.001).epsilon(1e-3));
}

TEST_CASE("parallel kernel matches the serial reference bit for bit") {
  const PolarAngle a(0.4), b(2.2);
  for (const auto& p : all_protocols()) {
    const auto serial = estimate_correlation_serial(p, a, b, 20001, 77);
    for (int threads : {1, 2, 3, 8}) {
      const auto par = estimate_correlation(p, a, b, 20001, 77, Parallelism{threads});
      CHECK(par.product_sum == serial.product_sum);
      CHECK(par.mean == serial.mean);
      CHECK(par.std_error == serial.std_error);
    }
    CHECK(estimate_correlation(p, a, b, 20001, 77).product_sum == serial.product_sum);
  }
}

TEST_CASE("different seeds give different samples") {
  const auto x = estimate_correlation(ProtocolSpec::two_share(), PolarAngle(0), PolarAngle(1.0), 10000, 1);
  const auto y = estimate_correlation(ProtocolSpec::two_share(), PolarAngle(0), PolarAngle(1.0), 10000, 2);
  CHECK(x.product_sum != y.product_sum);
}

TEST_CASE("estimates depend on the settings only through theta") {
  for (const auto& p : all_protocols()) {
    for (double phi : {0.3, 2.0, 5.5}) {
      const auto base = estimate_correlation(p, PolarAngle(0.2), PolarAngle(1.4), 100000, 5);
      const auto moved = estimate_correlation(p, PolarAngle(0.2 + phi), PolarAngle(1.4 + phi), 100000, 5);
      const double combined = std::hypot(base.std_error, moved.std_error);
      CHECK(std::fabs(base.mean - moved.mean) <= std::fmax(5.0 * combined, 1e-12));
    }
  }
}

TEST_CASE("standard error formula") {
  const auto e = make_estimate(PolarAngle(0), PolarAngle(1), 300, 1000);
  CHECK(e.mean == doctest::Approx(0.3));
  CHECK(e.std_error == doctest::Approx(std::sqrt((1 - 0.09) / 1000)));
  const auto e4 = make_estimate(PolarAngle(0), PolarAngle(1), 1200, 4000);
  CHECK(e4.std_error == doctest::Approx(0.5 * e.std_error).epsilon(1e-14));
  CHECK_THROWS_AS(make_estimate(PolarAngle(0), PolarAngle(0), 0, 0), UsageError);
  CHECK_THROWS_AS(estimate_correlation(ProtocolSpec::plain(), PolarAngle(0), PolarAngle(0), 0, 1), UsageError);
}

TEST_CASE("reference law mapping") {
  CHECK(reference_law(ProtocolSpec::plain())->kind() == LawKind::Linear);
  CHECK(reference_law(ProtocolSpec::fixed_shift(0.2))->delta() == 0.2);
  CHECK(reference_law(ProtocolSpec::two_share())->kind() == LawKind::AveragedShift);
  CHECK(reference_law(ProtocolSpec::random_shift())->kind() == LawKind::AveragedShift);
  CHECK(reference_law(ProtocolSpec::quantum())->kind() == LawKind::QuantumCosine);
  CHECK_FALSE(reference_law(ProtocolSpec::adaptive(2)).has_value());
}

TEST_CASE("sweep_curve") {
  SUBCASE("linear law at delta = 0") {
    const auto s = sweep_curve(ProtocolSpec::fixed_shift(0.0), 5, 100000, 11);
    const std::vector<double> expected{-1.0, -0.5, 0.0, 0.5, 1.0};
    REQUIRE(s.estimates.size() == 5);
    for (std::size_t j = 0; j < 5; ++j) CHECK(within_sigmas(s.estimates[j], expected[j]));
    CHECK(s.grid.back().value() == kPi);
  }
  SUBCASE("two-share") {
    const auto s = sweep_curve(ProtocolSpec::two_share(), 3, 100000, 12);
    const std::vector<double> expected{-1.0, 0.0, 1.0};
    for (std::size_t j = 0; j < 3; ++j) CHECK(within_sigmas(s.estimates[j], expected[j]));
  }
  SUBCASE("fixed shift pi/2") {
    const auto s = sweep_curve(ProtocolSpec::fixed_shift(kHalfPi), 9, 100000, 13);
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(within_sigmas(s.estimates[j], fixed_shift_correlation(s.grid[j], kHalfPi)));
    }
  }
  SUBCASE("grid is strictly increasing and aligned") {
    const auto s = sweep_curve(ProtocolSpec::adaptive(4), 17, 100, 14);
    CHECK_FALSE(s.analytic_reference.has_value());
    REQUIRE(s.grid.size() == s.estimates.size());
    for (std::size_t j = 0; j < s.grid.size(); ++j) {
      if (j > 0) CHECK(s.grid[j].value() > s.grid[j - 1].value());
      CHECK(s.estimates[j].theta.value() == doctest::Approx(s.grid[j].value()));
    }
    CHECK_THROWS_AS(max_abs_deviation(s), UsageError);
  }
  CHECK_THROWS_AS(sweep_curve(ProtocolSpec::plain(), 1, 10, 0), UsageError);
  CHECK_THROWS_AS(sweep_curve(ProtocolSpec::plain(), 3, 0, 0), UsageError);
}

TEST_CASE("max_abs_deviation") {
  SUBCASE("exact reference gives zero") {
    CurveSweep s{.protocol = ProtocolSpec::plain(), .analytic_reference = CorrelationLaw::linear()};
    for (int j = 0; j < 5; ++j) {
      const double t = j * kPi / 4;
      s.grid.emplace_back(t);
      CorrelationEstimate e{.theta = SeparationAngle(t), .mean = linear_correlation(SeparationAngle(t)), .n = 1};
      s.estimates.push_back(e);
    }
    CHECK(max_abs_deviation(s) == doctest::Approx(0.0));
  }
  // 0.006 is just above 5 sigma at n = 10^6 (sigma <= 1/sqrt(n)).
  SUBCASE("plain protocol, 61 points") {
    CHECK(max_abs_deviation(sweep_curve(ProtocolSpec::plain(), 61, 1000000, 21)) <= 0.006);
  }
  SUBCASE("fixed shift pi/2, 61 points") {
    CHECK(max_abs_deviation(sweep_curve(ProtocolSpec::fixed_shift(kHalfPi), 61, 1000000, 22)) <= 0.006);
  }
}
