#pragma once

// Closed-form correlation laws E(theta) and the quadrature oracles that
// rebuild the averaged law from its integral representations.
//
// All laws follow the singlet convention: E(0) = -1, E(pi) = +1.

#include <optional>
#include <string_view>

#include "shiftbell/angles.hpp"

namespace shiftbell {

inline constexpr double kDefaultQuadTol = 1e-9;

enum class HeavisideAtZero { Zero, One };

// Single-bit law at delta = pi/2 written with step functions:
//   H(t - 3pi/4) - H(pi/4 - t) - 2(1 - 2t/pi) H(t - pi/4) H(3pi/4 - t).
// Only defined on domain interiors; throws BoundaryAmbiguityError at
// t = pi/4 and t = 3pi/4. `h0` selects H(0) and exists for fault injection;
// interior values do not depend on it.
double heaviside_form_correlation(SeparationAngle theta, HeavisideAtZero h0 = HeavisideAtZero::Zero);

// Five-domain piecewise-linear law of the fixed-shift protocol. Domains are
// half-open on the left, exactly as in the piecewise definition:
//   [0, d/2], (d/2, (pi-d)/2], ((pi-d)/2, (pi+d)/2], ((pi+d)/2, pi-d/2], (pi-d/2, pi].
// Throws ConfigError unless 0 <= delta <= pi/2.
double fixed_shift_correlation(SeparationAngle theta, double delta);

// Piecewise-quadratic law of the two-share / random-shift protocols:
//   (4/pi^2) [ (t^2 - pi^2/4) - 2 H(t - pi/2) (t - pi/2)^2 ].
double averaged_shift_correlation(SeparationAngle theta);

// 2t/pi - 1.
double linear_correlation(SeparationAngle theta);

// -cos t.
double quantum_correlation(SeparationAngle theta);

// (2/pi) * integral over delta in [0, pi/2] of fixed_shift_correlation.
// Throws NumericError if the quadrature misses quad_tol.
double delta_average(SeparationAngle theta, double quad_tol = kDefaultQuadTol);

// Closed form of the lambda2 integral for a fixed lambda1 at angle t from
// Bob's direction: 2t/pi - 1.
double inner_share_integral(double t);
// Same integral by quadrature of sgn[b.(lambda2 - lambda1)] / (2pi).
double inner_share_integral_quadrature(double t, double quad_tol = 1e-10);

// (4/pi^2) * integral over tau in [0, pi] of sgn(cos tau) |tau - r|, split
// at tau = pi/2 and tau = r.
double outer_share_integral(double r, double quad_tol = kDefaultQuadTol);

enum class LawKind { HeavisideForm, FixedShift, AveragedShift, Linear, QuantumCosine };

class CorrelationLaw {
 public:
  static CorrelationLaw heaviside_form() { return CorrelationLaw(LawKind::HeavisideForm, std::nullopt); }
  // Throws ConfigError unless 0 <= delta <= pi/2.
  static CorrelationLaw fixed_shift(double delta);
  static CorrelationLaw averaged_shift() { return CorrelationLaw(LawKind::AveragedShift, std::nullopt); }
  static CorrelationLaw linear() { return CorrelationLaw(LawKind::Linear, std::nullopt); }
  static CorrelationLaw quantum_cosine() { return CorrelationLaw(LawKind::QuantumCosine, std::nullopt); }

  LawKind kind() const { return kind_; }
  std::optional<double> delta() const { return delta_; }
  std::string_view name() const;

  double operator()(SeparationAngle theta) const;

 private:
  CorrelationLaw(LawKind kind, std::optional<double> delta) : kind_(kind), delta_(delta) {}
  LawKind kind_;
  std::optional<double> delta_;
};

}  // namespace shiftbell
