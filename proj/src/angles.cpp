#include "shiftbell/angles.hpp"

#include <cmath>
#include <string>

#include "shiftbell/errors.hpp"

namespace shiftbell {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": non-finite input");
  }
}

}  // namespace

double normalize_angle(double radians) {
  require_finite(radians, "normalize_angle");
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value plus 2pi can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

PolarAngle PolarAngle::from_degrees(double degrees) {
  require_finite(degrees, "PolarAngle::from_degrees");
  return PolarAngle(degrees * (kPi / 180.0));
}

SeparationAngle::SeparationAngle(double theta) : theta_(theta) {
  require_finite(theta, "SeparationAngle");
  if (theta < 0.0 || theta > kPi) {
    throw DomainError("SeparationAngle: " + std::to_string(theta) + " outside [0, pi]");
  }
}

Sign sgn(double x) {
  require_finite(x, "sgn");
  return x >= 0.0 ? Sign::plus() : Sign::minus();
}

int heaviside(double x) {
  require_finite(x, "heaviside");
  return x > 0.0 ? 1 : 0;
}

SeparationAngle separation(PolarAngle a, PolarAngle b) {
  const double d = std::fabs(a.value() - b.value());
  return SeparationAngle(d <= kPi ? d : kTwoPi - d);
}

std::optional<Sign> try_resultant_sign(PolarAngle b, PolarAngle u, Sign c, PolarAngle v) {
  const double cf = c.value();
  const double wx = std::cos(u.value()) + cf * std::cos(v.value());
  const double wy = std::sin(u.value()) + cf * std::sin(v.value());
  if (std::hypot(wx, wy) <= kDegenerateNorm) return std::nullopt;
  return sgn(std::cos(b.value()) * wx + std::sin(b.value()) * wy);
}

Sign resultant_sign(PolarAngle b, PolarAngle u, Sign c, PolarAngle v) {
  if (auto s = try_resultant_sign(b, u, c, v)) return *s;
  throw DegenerateResultantError("resultant vector has zero length");
}

}  // namespace shiftbell
