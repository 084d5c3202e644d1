#include "shiftbell/analytics.hpp"

#include <cmath>
#include <string>

#include "shiftbell/errors.hpp"
#include "shiftbell/quadrature.hpp"

namespace shiftbell {

namespace {

void check_delta(double delta) {
  if (!std::isfinite(delta) || delta < 0.0 || delta > kHalfPi) {
    throw ConfigError("law delta must lie in [0, pi/2], got " + std::to_string(delta));
  }
}

double step(double x, HeavisideAtZero h0) {
  if (x == 0.0) return h0 == HeavisideAtZero::One ? 1.0 : 0.0;
  return heaviside(x);
}

}  // namespace

double heaviside_form_correlation(SeparationAngle theta, HeavisideAtZero h0) {
  const double t = theta.value();
  if (t == 0.25 * kPi || t == 0.75 * kPi) {
    throw BoundaryAmbiguityError("step form is ambiguous at theta = pi/4 and 3pi/4; use the fixed-shift law");
  }
  return step(t - 0.75 * kPi, h0) - step(0.25 * kPi - t, h0) -
         2.0 * (1.0 - 2.0 * t / kPi) * step(t - 0.25 * kPi, h0) * step(0.75 * kPi - t, h0);
}

double fixed_shift_correlation(SeparationAngle theta, double delta) {
  check_delta(delta);
  const double t = theta.value();
  const double h = 0.5 * delta;
  if (t <= h) return -1.0;
  if (t <= 0.5 * (kPi - delta)) return -1.0 + 2.0 / kPi * (t - h);
  if (t <= 0.5 * (kPi + delta)) return -2.0 * (1.0 - 2.0 / kPi * t);
  if (t <= kPi - h) return 1.0 + 2.0 / kPi * (t - kPi + h);
  return 1.0;
}

double averaged_shift_correlation(SeparationAngle theta) {
  const double t = theta.value();
  const double past_half = t - kHalfPi;
  return 4.0 / (kPi * kPi) * ((t * t - 0.25 * kPi * kPi) - 2.0 * heaviside(past_half) * past_half * past_half);
}

double linear_correlation(SeparationAngle theta) { return 2.0 * theta.value() / kPi - 1.0; }

double quantum_correlation(SeparationAngle theta) { return -std::cos(theta.value()); }

double delta_average(SeparationAngle theta, double quad_tol) {
  const double t = theta.value();
  // Values of delta at which theta sits on a domain boundary; the integrand
  // is linear in delta between them.
  const std::vector<double> kinks{2.0 * t, kPi - 2.0 * t, 2.0 * t - kPi, kTwoPi - 2.0 * t};
  const auto r = integrate([&](double d) { return fixed_shift_correlation(theta, d); }, 0.0, kHalfPi, kinks,
                           0.5 * kPi * quad_tol);
  return 2.0 / kPi * r.value;
}

double inner_share_integral(double t) {
  if (!std::isfinite(t) || t < 0.0 || t > kPi) throw DomainError("inner_share_integral: t outside [0, pi]");
  return 2.0 * t / kPi - 1.0;
}

double inner_share_integral_quadrature(double t, double quad_tol) {
  if (!std::isfinite(t) || t < 0.0 || t > kPi) {
    throw DomainError("inner_share_integral_quadrature: t outside [0, pi]");
  }
  // Bob along +y, lambda1 at angle t from it: both parameterised as
  // (sin x, cos x). The sign flips where b.lambda2 = b.lambda1, at x = +-t.
  const double b_dot_l1 = std::cos(t);
  const auto integrand = [&](double tau) { return sgn(std::cos(tau) - b_dot_l1).value() / kTwoPi; };
  const auto r = integrate(integrand, -kPi, kPi, {-t, t}, quad_tol);
  return r.value;
}

double outer_share_integral(double r, double quad_tol) {
  if (!std::isfinite(r) || r < 0.0 || r > kPi) throw DomainError("outer_share_integral: r outside [0, pi]");
  const double scale = 4.0 / (kPi * kPi);
  const auto integrand = [&](double tau) { return sgn(std::cos(tau)).value() * std::fabs(tau - r); };
  const auto q = integrate(integrand, 0.0, kPi, {kHalfPi, r}, quad_tol / scale);
  return scale * q.value;
}

CorrelationLaw CorrelationLaw::fixed_shift(double delta) {
  check_delta(delta);
  return CorrelationLaw(LawKind::FixedShift, delta);
}

std::string_view CorrelationLaw::name() const {
  switch (kind_) {
    case LawKind::HeavisideForm: return "heaviside-form";
    case LawKind::FixedShift: return "fixed-shift";
    case LawKind::AveragedShift: return "averaged-shift";
    case LawKind::Linear: return "linear";
    case LawKind::QuantumCosine: return "quantum-cosine";
  }
  return "unknown";
}

double CorrelationLaw::operator()(SeparationAngle theta) const {
  switch (kind_) {
    case LawKind::HeavisideForm: return heaviside_form_correlation(theta);
    case LawKind::FixedShift: return fixed_shift_correlation(theta, *delta_);
    case LawKind::AveragedShift: return averaged_shift_correlation(theta);
    case LawKind::Linear: return linear_correlation(theta);
    case LawKind::QuantumCosine: return quantum_correlation(theta);
  }
  throw ConfigError("unhandled law kind");
}

}  // namespace shiftbell
