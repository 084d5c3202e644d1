#pragma once

// CHSH functional S = E(a,b) + E(a,b') + E(a',b) - E(a',b') from closed-form
// laws or sampled protocols, classified against the local bound 2, the
// Tsirelson bound 2*sqrt(2) and the algebraic maximum 4.

#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>

#include "shiftbell/analytics.hpp"
#include "shiftbell/montecarlo.hpp"
#include "shiftbell/protocols.hpp"

namespace shiftbell {

inline constexpr double kLocalBound = 2.0;
inline constexpr double kTsirelsonBound = 2.0 * std::numbers::sqrt2;
inline constexpr double kAlgebraicBound = 4.0;

struct ChshSettings {
  PolarAngle a;
  PolarAngle a_prime;
  PolarAngle b;
  PolarAngle b_prime;

  // a = pi/2, a' = 0, b = pi/4, b' = 3pi/4.
  static ChshSettings standard();
};

enum class BoundClass { Local, Superclassical, Superquantum };

std::string_view to_string(BoundClass c);

struct ChshResult {
  double e_ab = 0.0;
  double e_abp = 0.0;
  double e_apb = 0.0;
  double e_apbp = 0.0;
  double s = 0.0;
  double abs_s = 0.0;
  BoundClass classification = BoundClass::Local;
  std::optional<double> stderr_s;
};

// Local for abs_s <= 2, Superclassical for 2 < abs_s <= 2 sqrt 2,
// Superquantum above. Throws InvariantViolation when abs_s > 4 + 1e-9 and
// DomainError for negative or non-finite input.
BoundClass classify(double abs_s);

ChshResult assemble_chsh(double e_ab, double e_abp, double e_apb, double e_apbp, std::optional<double> stderr_s);

// Throws BoundaryAmbiguityError for the step-form law at pi/4 or 3pi/4.
ChshResult chsh_analytic(const CorrelationLaw& law, const ChshSettings& settings);

// Pair p in (ab, ab', a'b, a'b') is estimated with derive_seed(seed, p).
ChshResult chsh_sampled(const ProtocolSpec& protocol, const ChshSettings& settings, std::uint64_t n_per_pair,
                        std::uint64_t seed, Parallelism par = {});

}  // namespace shiftbell
