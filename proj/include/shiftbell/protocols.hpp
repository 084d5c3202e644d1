#pragma once

// Trial-level protocols: given settings and shared randomness, produce
// Alice's outcome, the communicated bit(s) and Bob's outcome.
//
// Alice's and Bob's sides are separate functions. Nothing in the `bob`
// namespace takes Alice's setting; Bob sees only his own setting, the
// shares and the bits he received.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/container/static_vector.hpp>

#include "shiftbell/angles.hpp"

namespace shiftbell {

class RngStream;

inline constexpr int kMaxAdaptiveBits = 52;

struct PlainLhv {};
struct FixedShift {
  double delta = 0.0;
};
struct RandomShift {};
struct TwoShare {};
struct AdaptiveK {
  int k_bits = 1;
};
struct QuantumReference {};

enum class ProtocolKind { PlainLhv, FixedShift, RandomShift, TwoShare, AdaptiveK, QuantumReference };

class ProtocolSpec {
 public:
  using Variant = std::variant<PlainLhv, FixedShift, RandomShift, TwoShare, AdaptiveK, QuantumReference>;

  static ProtocolSpec plain() { return ProtocolSpec(PlainLhv{}); }
  // Throws ConfigError unless 0 <= delta <= pi/2.
  static ProtocolSpec fixed_shift(double delta);
  static ProtocolSpec random_shift() { return ProtocolSpec(RandomShift{}); }
  static ProtocolSpec two_share() { return ProtocolSpec(TwoShare{}); }
  // Throws ConfigError unless 1 <= k_bits <= kMaxAdaptiveBits.
  static ProtocolSpec adaptive(int k_bits);
  static ProtocolSpec quantum() { return ProtocolSpec(QuantumReference{}); }

  // Parses the CLI names: plain, fixed-shift, random-shift, two-share,
  // adaptive, quantum. `delta` / `k_bits` must be given exactly where needed.
  static ProtocolSpec parse(std::string_view name, std::optional<double> delta,
                            std::optional<int> k_bits);

  ProtocolKind kind() const { return static_cast<ProtocolKind>(variant_.index()); }
  const Variant& variant() const { return variant_; }
  std::optional<double> delta() const;
  std::optional<int> k_bits() const;

  // CLI name, e.g. "fixed-shift".
  std::string_view name() const;
  // Bits Alice sends per trial.
  int bits_per_trial() const;

 private:
  explicit ProtocolSpec(Variant v) : variant_(v) {}
  Variant variant_;
};

using ShareList = boost::container::static_vector<PolarAngle, 2>;
using BitList = boost::container::static_vector<Sign, kMaxAdaptiveBits>;

struct TrialRecord {
  PolarAngle a;
  PolarAngle b;
  ShareList shares;
  // Per-trial shift for RandomShift; both parties know it.
  std::optional<double> delta;
  BitList comm_bits;
  Sign alpha;
  Sign beta;

  Sign product() const { return alpha * beta; }
};

namespace alice {

Sign output(PolarAngle a, PolarAngle lambda);
// c = sgn(a.lambda) sgn(a.Delta) with Delta = lambda + delta.
Sign shift_bit(PolarAngle a, PolarAngle lambda, double delta);
Sign two_share_bit(PolarAngle a, PolarAngle lambda1, PolarAngle lambda2);
// k-bit index of the sector containing a, most significant bit first.
BitList sector_bits(PolarAngle a, int k_bits);

}  // namespace alice

namespace bob {

// -sgn[b.(lambda + c Delta)]; nullopt on a degenerate resultant.
std::optional<Sign> shift_output(PolarAngle b, PolarAngle lambda, double delta, Sign c);
// -sgn[b.(lambda1 + c lambda2)]; nullopt on a degenerate resultant.
std::optional<Sign> two_share_output(PolarAngle b, PolarAngle lambda1, PolarAngle lambda2, Sign c);
// Centre of the sector named by the received bits.
PolarAngle sector_centre(const BitList& bits);
Sign adaptive_output(PolarAngle b, PolarAngle lambda, const BitList& bits);

}  // namespace bob

// Quantized direction Alice and Bob agree on in the adaptive protocol.
PolarAngle quantize_direction(PolarAngle a, int k_bits);

Sign alice_output(PolarAngle a, PolarAngle lambda);
// Throws ConfigError unless 0 <= delta <= pi/2.
Sign comm_bit_fixed(PolarAngle a, PolarAngle lambda, double delta);

// The functions below throw DegenerateResultantError where Bob's resultant
// vanishes; samplers use sample_trial, which redraws instead.
TrialRecord run_trial_fixed(PolarAngle a, PolarAngle b, PolarAngle lambda, double delta);
TrialRecord run_trial_plain(PolarAngle a, PolarAngle b, PolarAngle lambda);
TrialRecord run_trial_random_shift(PolarAngle a, PolarAngle b, PolarAngle lambda, double delta_draw);
TrialRecord run_trial_twoshare(PolarAngle a, PolarAngle b, PolarAngle lambda1, PolarAngle lambda2);
TrialRecord run_trial_adaptive(PolarAngle a, PolarAngle b, int k_bits, PolarAngle lambda);
// u, v in [0, 1).
TrialRecord run_trial_quantum(PolarAngle a, PolarAngle b, double u, double v);

// Draws the protocol's shares from `rng` and runs one trial, redrawing on
// degenerate resultants.
TrialRecord sample_trial(const ProtocolSpec& protocol, PolarAngle a, PolarAngle b, RngStream& rng);

}  // namespace shiftbell
