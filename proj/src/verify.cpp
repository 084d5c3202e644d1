#include "shiftbell/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "shiftbell/bell.hpp"
#include "shiftbell/report.hpp"

namespace shiftbell {

namespace {

constexpr int kGridPoints = 61;

const std::vector<double>& shift_family() {
  static const std::vector<double> deltas{0.0, kPi / 10, kPi / 5, 3 * kPi / 10, 2 * kPi / 5, kHalfPi};
  return deltas;
}

double grid_theta(int j, int points) { return j + 1 == points ? kPi : j * kPi / (points - 1); }

CheckResult bounded(std::string name, double observed, double tol, std::string detail = {}) {
  return {std::move(name), observed <= tol, observed, tol, std::move(detail)};
}

CheckResult heaviside_form_agreement(HeavisideAtZero h0) {
  constexpr int kPoints = 10000;
  double worst = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const SeparationAngle theta((i + 0.5) * kPi / kPoints);
    if (theta.value() == 0.25 * kPi || theta.value() == 0.75 * kPi) continue;
    worst = std::fmax(worst, std::fabs(heaviside_form_correlation(theta, h0) - fixed_shift_correlation(theta, kHalfPi)));
  }
  return bounded("step-form-equals-fixed-shift-at-pi/2", worst, 1e-12);
}

CheckResult delta_average_identity() {
  double worst = 0.0;
  for (int j = 0; j < 181; ++j) {
    const SeparationAngle theta(grid_theta(j, 181));
    worst = std::fmax(worst, std::fabs(delta_average(theta, 1e-9) - averaged_shift_correlation(theta)));
  }
  return bounded("delta-average-equals-averaged-law", worst, 1e-8);
}

CheckResult inner_integral_oracle() {
  double worst = 0.0;
  for (int j = 0; j < 100; ++j) {
    const double t = grid_theta(j, 100);
    worst = std::fmax(worst, std::fabs(inner_share_integral(t) - inner_share_integral_quadrature(t)));
  }
  return bounded("inner-share-integral-quadrature", worst, 1e-6);
}

CheckResult outer_integral_oracle() {
  double worst = 0.0;
  for (int j = 0; j < 100; ++j) {
    const double r = grid_theta(j, 100);
    worst = std::fmax(worst, std::fabs(outer_share_integral(r, 1e-9) - averaged_shift_correlation(SeparationAngle(r))));
  }
  return bounded("outer-share-integral-equals-averaged-law", worst, 1e-8);
}

CheckResult continuity() {
  double worst = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double delta = i * kHalfPi / 50;
    for (double edge : {0.5 * delta, 0.5 * (kPi - delta), 0.5 * (kPi + delta), kPi - 0.5 * delta}) {
      // Left value (domain owning the edge) against the right neighbour's
      // formula evaluated at the edge, reached by a shrinking step.
      const double left = fixed_shift_correlation(SeparationAngle(edge), delta);
      const double right = fixed_shift_correlation(SeparationAngle(std::fmin(kPi, std::nextafter(edge, 4.0))), delta);
      worst = std::fmax(worst, std::fabs(left - right));
    }
  }
  return bounded("fixed-shift-law-continuity", worst, 1e-12);
}

CheckResult superquantum_crossing() {
  double weakest = INFINITY;
  for (double delta : shift_family()) {
    if (delta == 0.0) continue;
    double best = -INFINITY;
    for (int j = 0; j < 1001; ++j) {
      const SeparationAngle theta(grid_theta(j, 1001));
      best = std::fmax(best, std::fabs(fixed_shift_correlation(theta, delta)) - std::fabs(quantum_correlation(theta)));
    }
    weakest = std::fmin(weakest, best);
  }
  return {"superquantum-crossing-every-delta", weakest > 1e-9, weakest, 1e-9, "min over delta of max margin"};
}

CheckResult chsh_value(std::string name, const CorrelationLaw& law, double expected, double tol) {
  const double abs_s = chsh_analytic(law, ChshSettings::standard()).abs_s;
  return bounded(std::move(name), std::fabs(abs_s - expected), tol, "|S| = " + format_real(abs_s));
}

template <class Product>
double sweep_deviation(const CorrelationLaw& law, std::uint64_t n, std::uint64_t seed, Parallelism par,
                       const Product& product, double& worst_theta) {
  double worst = 0.0;
  const PolarAngle a(0.0);
  for (int j = 0; j < kGridPoints; ++j) {
    const double t = grid_theta(j, kGridPoints);
    const PolarAngle b(t);
    const auto sum = sum_products(n, derive_seed(seed, j), par, [&](RngStream& rng) { return product(a, b, rng); });
    const double dev = std::fabs(static_cast<double>(sum) / static_cast<double>(n) - law(SeparationAngle(t)));
    if (dev > worst) {
      worst = dev;
      worst_theta = t;
    }
  }
  return worst;
}

CheckResult mc_against_law(std::string name, const ProtocolSpec& protocol, const CorrelationLaw& law,
                           const VerifyOptions& opt, bool flip) {
  const double tol = 5.0 / std::sqrt(static_cast<double>(opt.n));
  double worst_theta = 0.0;
  const double worst = sweep_deviation(law, opt.n, opt.seed, opt.par,
                                       [&](PolarAngle a, PolarAngle b, RngStream& rng) -> std::int64_t {
                                         const int p = sample_trial(protocol, a, b, rng).product().value();
                                         return flip ? -p : p;
                                       },
                                       worst_theta);
  return bounded(std::move(name), worst, tol, "worst at theta = " + format_real(worst_theta));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  std::vector<CheckResult> checks;
  checks.push_back(heaviside_form_agreement(opt.heaviside_at_zero));
  checks.push_back(delta_average_identity());
  checks.push_back(inner_integral_oracle());
  checks.push_back(outer_integral_oracle());
  checks.push_back(continuity());
  checks.push_back(superquantum_crossing());
  checks.push_back(chsh_value("chsh-fixed-shift-pi/2-is-4", CorrelationLaw::fixed_shift(kHalfPi), 4.0, 0.0));
  checks.push_back(chsh_value("chsh-quantum-is-tsirelson", CorrelationLaw::quantum_cosine(), kTsirelsonBound, 1e-12));
  checks.push_back(chsh_value("chsh-linear-is-2", CorrelationLaw::linear(), 2.0, 0.0));
  checks.push_back(chsh_value("chsh-averaged-is-3", CorrelationLaw::averaged_shift(), 3.0, 1e-12));

  for (double delta : shift_family()) {
    const auto protocol = ProtocolSpec::fixed_shift(delta);
    checks.push_back(mc_against_law("mc-fixed-shift-delta=" + format_real(delta), protocol,
                                    CorrelationLaw::fixed_shift(delta), opt, opt.flip_bob_fixed_sign));
  }
  checks.push_back(mc_against_law("mc-two-share", ProtocolSpec::two_share(), CorrelationLaw::averaged_shift(), opt, false));
  checks.push_back(
      mc_against_law("mc-random-shift", ProtocolSpec::random_shift(), CorrelationLaw::averaged_shift(), opt, false));
  checks.push_back(mc_against_law("mc-plain", ProtocolSpec::plain(), CorrelationLaw::linear(), opt, false));
  checks.push_back(
      mc_against_law("mc-quantum", ProtocolSpec::quantum(), CorrelationLaw::quantum_cosine(), opt, false));

  const auto adaptive = chsh_sampled(ProtocolSpec::adaptive(3), ChshSettings::standard(), 1000, opt.seed, opt.par);
  checks.push_back(bounded("chsh-adaptive-k3-is-4", std::fabs(adaptive.abs_s - 4.0), 0.0));
  return checks;
}

void print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " observed=" << format_real(c.observed)
        << " tol=" << format_real(c.tolerance);
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
}

}  // namespace shiftbell
