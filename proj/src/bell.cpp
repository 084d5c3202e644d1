#include "shiftbell/bell.hpp"

#include <cmath>
#include <string>

#include "shiftbell/errors.hpp"

namespace shiftbell {

namespace {

constexpr double kAlgebraicSlack = 1e-9;

}  // namespace

ChshSettings ChshSettings::standard() {
  return {PolarAngle(kHalfPi), PolarAngle(0.0), PolarAngle(0.25 * kPi), PolarAngle(0.75 * kPi)};
}

std::string_view to_string(BoundClass c) {
  switch (c) {
    case BoundClass::Local: return "Local";
    case BoundClass::Superclassical: return "Superclassical";
    case BoundClass::Superquantum: return "Superquantum";
  }
  return "unknown";
}

BoundClass classify(double abs_s) {
  if (!std::isfinite(abs_s) || abs_s < 0.0) throw DomainError("|S| must be finite and non-negative");
  if (abs_s > kAlgebraicBound + kAlgebraicSlack) {
    throw InvariantViolation("|S| = " + std::to_string(abs_s) + " exceeds the algebraic maximum 4");
  }
  if (abs_s <= kLocalBound) return BoundClass::Local;
  if (abs_s <= kTsirelsonBound) return BoundClass::Superclassical;
  return BoundClass::Superquantum;
}

ChshResult assemble_chsh(double e_ab, double e_abp, double e_apb, double e_apbp, std::optional<double> stderr_s) {
  ChshResult r{.e_ab = e_ab, .e_abp = e_abp, .e_apb = e_apb, .e_apbp = e_apbp, .stderr_s = stderr_s};
  r.s = e_ab + e_abp + e_apb - e_apbp;
  r.abs_s = std::fabs(r.s);
  r.classification = classify(r.abs_s);
  return r;
}

ChshResult chsh_analytic(const CorrelationLaw& law, const ChshSettings& settings) {
  const auto& [a, ap, b, bp] = settings;
  return assemble_chsh(law(separation(a, b)), law(separation(a, bp)), law(separation(ap, b)),
                       law(separation(ap, bp)), std::nullopt);
}

ChshResult chsh_sampled(const ProtocolSpec& protocol, const ChshSettings& settings, std::uint64_t n_per_pair,
                        std::uint64_t seed, Parallelism par) {
  const auto& [a, ap, b, bp] = settings;
  const auto e_ab = estimate_correlation(protocol, a, b, n_per_pair, derive_seed(seed, 0), par);
  const auto e_abp = estimate_correlation(protocol, a, bp, n_per_pair, derive_seed(seed, 1), par);
  const auto e_apb = estimate_correlation(protocol, ap, b, n_per_pair, derive_seed(seed, 2), par);
  const auto e_apbp = estimate_correlation(protocol, ap, bp, n_per_pair, derive_seed(seed, 3), par);
  const double se = std::sqrt(e_ab.std_error * e_ab.std_error + e_abp.std_error * e_abp.std_error +
                              e_apb.std_error * e_apb.std_error + e_apbp.std_error * e_apbp.std_error);
  return assemble_chsh(e_ab.mean, e_abp.mean, e_apb.mean, e_apbp.mean, se);
}

}  // namespace shiftbell
