#include "shiftbell/protocols.hpp"

#include <cmath>
#include <string>

#include "shiftbell/errors.hpp"
#include "shiftbell/rng.hpp"

namespace shiftbell {

namespace {

void check_delta(double delta) {
  if (!std::isfinite(delta) || delta < 0.0 || delta > kHalfPi) {
    throw ConfigError("shift delta must lie in [0, pi/2], got " + std::to_string(delta));
  }
}

void check_k(int k_bits) {
  if (k_bits < 1 || k_bits > kMaxAdaptiveBits) {
    throw ConfigError("adaptive k_bits must lie in [1, " + std::to_string(kMaxAdaptiveBits) +
                      "], got " + std::to_string(k_bits));
  }
}

PolarAngle uniform_angle(RngStream& rng) { return PolarAngle(kTwoPi * rng.uniform()); }

// Shared body of the fixed- and random-shift protocols.
std::optional<TrialRecord> try_shift_trial(PolarAngle a, PolarAngle b, PolarAngle lambda, double delta) {
  TrialRecord r{.a = a, .b = b};
  r.shares.push_back(lambda);
  r.alpha = alice::output(a, lambda);
  const Sign c = alice::shift_bit(a, lambda, delta);
  r.comm_bits.push_back(c);
  const auto beta = bob::shift_output(b, lambda, delta, c);
  if (!beta) return std::nullopt;
  r.beta = *beta;
  return r;
}

std::optional<TrialRecord> try_two_share_trial(PolarAngle a, PolarAngle b, PolarAngle lambda1,
                                               PolarAngle lambda2) {
  TrialRecord r{.a = a, .b = b};
  r.shares.push_back(lambda1);
  r.shares.push_back(lambda2);
  r.alpha = alice::output(a, lambda1);
  const Sign c = alice::two_share_bit(a, lambda1, lambda2);
  r.comm_bits.push_back(c);
  const auto beta = bob::two_share_output(b, lambda1, lambda2, c);
  if (!beta) return std::nullopt;
  r.beta = *beta;
  return r;
}

TrialRecord or_throw(std::optional<TrialRecord> r) {
  if (!r) throw DegenerateResultantError("Bob's resultant vector has zero length");
  return *std::move(r);
}

// Sector index of a among 2^k equal sectors.
std::uint64_t sector_index(PolarAngle a, int k_bits) {
  const std::uint64_t sectors = std::uint64_t{1} << k_bits;
  const auto idx = static_cast<std::uint64_t>(std::floor(a.value() / kTwoPi * static_cast<double>(sectors)));
  return idx < sectors ? idx : sectors - 1;
}

// -1 (anticorrelated) below pi/2, +1 from pi/2 on.
Sign step_class(SeparationAngle theta) { return theta.value() < kHalfPi ? Sign::minus() : Sign::plus(); }

}  // namespace

ProtocolSpec ProtocolSpec::fixed_shift(double delta) {
  check_delta(delta);
  return ProtocolSpec(FixedShift{delta});
}

ProtocolSpec ProtocolSpec::adaptive(int k_bits) {
  check_k(k_bits);
  return ProtocolSpec(AdaptiveK{k_bits});
}

ProtocolSpec ProtocolSpec::parse(std::string_view name, std::optional<double> delta,
                                 std::optional<int> k_bits) {
  const bool needs_delta = name == "fixed-shift";
  const bool needs_k = name == "adaptive";
  if (delta && !needs_delta) throw ConfigError("--delta only applies to fixed-shift");
  if (k_bits && !needs_k) throw ConfigError("--k only applies to adaptive");
  if (needs_delta) {
    if (!delta) throw ConfigError("fixed-shift requires --delta");
    return fixed_shift(*delta);
  }
  if (needs_k) {
    if (!k_bits) throw ConfigError("adaptive requires --k");
    return adaptive(*k_bits);
  }
  if (name == "plain") return plain();
  if (name == "random-shift") return random_shift();
  if (name == "two-share") return two_share();
  if (name == "quantum") return quantum();
  throw ConfigError("unknown protocol '" + std::string(name) + "'");
}

std::optional<double> ProtocolSpec::delta() const {
  if (const auto* f = std::get_if<FixedShift>(&variant_)) return f->delta;
  return std::nullopt;
}

std::optional<int> ProtocolSpec::k_bits() const {
  if (const auto* k = std::get_if<AdaptiveK>(&variant_)) return k->k_bits;
  return std::nullopt;
}

std::string_view ProtocolSpec::name() const {
  switch (kind()) {
    case ProtocolKind::PlainLhv: return "plain";
    case ProtocolKind::FixedShift: return "fixed-shift";
    case ProtocolKind::RandomShift: return "random-shift";
    case ProtocolKind::TwoShare: return "two-share";
    case ProtocolKind::AdaptiveK: return "adaptive";
    case ProtocolKind::QuantumReference: return "quantum";
  }
  return "unknown";
}

int ProtocolSpec::bits_per_trial() const {
  switch (kind()) {
    case ProtocolKind::PlainLhv:
    case ProtocolKind::QuantumReference: return 0;
    case ProtocolKind::AdaptiveK: return *k_bits();
    default: return 1;
  }
}

namespace alice {

Sign output(PolarAngle a, PolarAngle lambda) { return sgn(std::cos(a.value() - lambda.value())); }

Sign shift_bit(PolarAngle a, PolarAngle lambda, double delta) {
  return output(a, lambda) * sgn(std::cos(a.value() - lambda.value() - delta));
}

Sign two_share_bit(PolarAngle a, PolarAngle lambda1, PolarAngle lambda2) {
  return output(a, lambda1) * output(a, lambda2);
}

BitList sector_bits(PolarAngle a, int k_bits) {
  check_k(k_bits);
  const std::uint64_t idx = sector_index(a, k_bits);
  BitList bits;
  for (int j = k_bits - 1; j >= 0; --j) bits.push_back(Sign::from_bit(((idx >> j) & 1u) != 0));
  return bits;
}

}  // namespace alice

namespace bob {

std::optional<Sign> shift_output(PolarAngle b, PolarAngle lambda, double delta, Sign c) {
  const auto s = try_resultant_sign(b, lambda, c, lambda + delta);
  if (!s) return std::nullopt;
  return -*s;
}

std::optional<Sign> two_share_output(PolarAngle b, PolarAngle lambda1, PolarAngle lambda2, Sign c) {
  const auto s = try_resultant_sign(b, lambda1, c, lambda2);
  if (!s) return std::nullopt;
  return -*s;
}

PolarAngle sector_centre(const BitList& bits) {
  if (bits.empty()) throw ConfigError("adaptive protocol needs at least one bit");
  std::uint64_t idx = 0;
  for (Sign bit : bits) idx = (idx << 1) | (bit.is_plus() ? 1u : 0u);
  const double sectors = std::ldexp(1.0, static_cast<int>(bits.size()));
  return PolarAngle((static_cast<double>(idx) + 0.5) * kTwoPi / sectors);
}

Sign adaptive_output(PolarAngle b, PolarAngle lambda, const BitList& bits) {
  const PolarAngle centre = sector_centre(bits);
  return alice::output(centre, lambda) * step_class(separation(centre, b));
}

}  // namespace bob

PolarAngle quantize_direction(PolarAngle a, int k_bits) { return bob::sector_centre(alice::sector_bits(a, k_bits)); }

Sign alice_output(PolarAngle a, PolarAngle lambda) { return alice::output(a, lambda); }

Sign comm_bit_fixed(PolarAngle a, PolarAngle lambda, double delta) {
  check_delta(delta);
  return alice::shift_bit(a, lambda, delta);
}

TrialRecord run_trial_fixed(PolarAngle a, PolarAngle b, PolarAngle lambda, double delta) {
  check_delta(delta);
  return or_throw(try_shift_trial(a, b, lambda, delta));
}

TrialRecord run_trial_plain(PolarAngle a, PolarAngle b, PolarAngle lambda) {
  // delta = 0 makes the bit identically +1, so nothing is sent.
  TrialRecord r = or_throw(try_shift_trial(a, b, lambda, 0.0));
  r.comm_bits.clear();
  return r;
}

TrialRecord run_trial_random_shift(PolarAngle a, PolarAngle b, PolarAngle lambda, double delta_draw) {
  check_delta(delta_draw);
  TrialRecord r = or_throw(try_shift_trial(a, b, lambda, delta_draw));
  r.delta = delta_draw;
  return r;
}

TrialRecord run_trial_twoshare(PolarAngle a, PolarAngle b, PolarAngle lambda1, PolarAngle lambda2) {
  return or_throw(try_two_share_trial(a, b, lambda1, lambda2));
}

TrialRecord run_trial_adaptive(PolarAngle a, PolarAngle b, int k_bits, PolarAngle lambda) {
  TrialRecord r{.a = a, .b = b};
  r.shares.push_back(lambda);
  r.comm_bits = alice::sector_bits(a, k_bits);
  // Alice answers along her quantized direction, which Bob can rebuild.
  r.alpha = alice::output(quantize_direction(a, k_bits), lambda);
  r.beta = bob::adaptive_output(b, lambda, r.comm_bits);
  return r;
}

TrialRecord run_trial_quantum(PolarAngle a, PolarAngle b, double u, double v) {
  if (!(u >= 0.0 && u < 1.0) || !(v >= 0.0 && v < 1.0)) {
    throw DomainError("quantum reference draws must lie in [0, 1)");
  }
  TrialRecord r{.a = a, .b = b};
  const double half = 0.5 * separation(a, b).value();
  r.alpha = u < 0.5 ? Sign::plus() : Sign::minus();
  r.beta = v < std::cos(half) * std::cos(half) ? -r.alpha : r.alpha;
  return r;
}

TrialRecord sample_trial(const ProtocolSpec& protocol, PolarAngle a, PolarAngle b, RngStream& rng) {
  switch (protocol.kind()) {
    case ProtocolKind::PlainLhv:
      for (;;) {
        if (auto r = try_shift_trial(a, b, uniform_angle(rng), 0.0)) {
          r->comm_bits.clear();
          return *std::move(r);
        }
      }
    case ProtocolKind::FixedShift: {
      const double delta = *protocol.delta();
      for (;;) {
        if (auto r = try_shift_trial(a, b, uniform_angle(rng), delta)) return *std::move(r);
      }
    }
    case ProtocolKind::RandomShift:
      for (;;) {
        const PolarAngle lambda = uniform_angle(rng);
        const double delta = kHalfPi * rng.uniform();
        if (auto r = try_shift_trial(a, b, lambda, delta)) {
          r->delta = delta;
          return *std::move(r);
        }
      }
    case ProtocolKind::TwoShare:
      for (;;) {
        const PolarAngle lambda1 = uniform_angle(rng);
        const PolarAngle lambda2 = uniform_angle(rng);
        if (auto r = try_two_share_trial(a, b, lambda1, lambda2)) return *std::move(r);
      }
    case ProtocolKind::AdaptiveK:
      return run_trial_adaptive(a, b, *protocol.k_bits(), uniform_angle(rng));
    case ProtocolKind::QuantumReference: {
      const double u = rng.uniform();
      const double v = rng.uniform();
      return run_trial_quantum(a, b, u, v);
    }
  }
  throw ConfigError("unhandled protocol kind");
}

}  // namespace shiftbell
