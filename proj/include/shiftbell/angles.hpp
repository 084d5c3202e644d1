#pragma once

// Planar angle arithmetic and the sign / step conventions shared by every
// protocol and closed-form law.
//
// Conventions: sgn(0) = +1 and H(0) = 0. Ties have measure zero under
// continuous sampling, so neither choice moves an expectation value; fixing
// them makes single trials reproducible bit for bit.

#include <numbers>
#include <optional>

namespace shiftbell {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Resultant vectors shorter than this are treated as degenerate.
inline constexpr double kDegenerateNorm = 1e-12;

// Maps any finite angle onto [0, 2pi). Throws DomainError on NaN/inf.
double normalize_angle(double radians);

// Direction in the measurement plane, stored in [0, 2pi).
class PolarAngle {
 public:
  constexpr PolarAngle() = default;
  explicit PolarAngle(double radians) : value_(normalize_angle(radians)) {}

  static PolarAngle from_degrees(double degrees);

  constexpr double value() const { return value_; }

  friend PolarAngle operator+(PolarAngle a, double shift) {
    return PolarAngle(a.value_ + shift);
  }
  friend bool operator==(PolarAngle, PolarAngle) = default;

 private:
  double value_ = 0.0;
};

// Folded difference of two settings, theta in [0, pi].
class SeparationAngle {
 public:
  constexpr SeparationAngle() = default;
  // Throws DomainError unless 0 <= theta <= pi.
  explicit SeparationAngle(double theta);

  constexpr double value() const { return theta_; }
  friend bool operator==(SeparationAngle, SeparationAngle) = default;

 private:
  double theta_ = 0.0;
};

// Dichotomic value in {-1, +1}.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  // Maps bit 0 -> -1 and bit 1 -> +1.
  static constexpr Sign from_bit(bool bit) { return Sign(bit ? 1 : -1); }

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ > 0; }

  constexpr Sign operator-() const { return Sign(-value_); }
  friend constexpr Sign operator*(Sign x, Sign y) { return Sign(x.value_ * y.value_); }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  explicit constexpr Sign(int v) : value_(v) {}
  int value_ = 1;
};

// +1 for x >= 0, -1 otherwise. Throws DomainError on non-finite x.
Sign sgn(double x);

// 1 for x > 0, 0 otherwise. Throws DomainError on non-finite x.
int heaviside(double x);

SeparationAngle separation(PolarAngle a, PolarAngle b);

// Sign of b . (u + c v) for unit vectors at angles u, v.
// Returns nullopt when |u + c v| <= kDegenerateNorm.
std::optional<Sign> try_resultant_sign(PolarAngle b, PolarAngle u, Sign c, PolarAngle v);

// As try_resultant_sign, but throws DegenerateResultantError instead.
Sign resultant_sign(PolarAngle b, PolarAngle u, Sign c, PolarAngle v);

}  // namespace shiftbell
