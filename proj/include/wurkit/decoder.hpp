#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "wurkit/bits.hpp"
#include "wurkit/stage_mask.hpp"

namespace wurkit {

inline constexpr std::size_t kDefaultMaxCapacity = 64;
inline constexpr std::size_t kDefaultLayerCap = 8;

enum class Architecture { Legacy, Lpsd };

const char* to_string(Architecture arch);
Architecture parse_architecture(std::string_view name);

// The stored wake-up address A_0..A_{n-1}; A_0 is the first bit on air.
class Address {
 public:
  explicit Address(BitStream bits, std::size_t max_capacity = kDefaultMaxCapacity);
  static Address parse(std::string_view text, std::size_t max_capacity = kDefaultMaxCapacity);

  std::size_t size() const { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  std::span<const Bit> bits() const { return bits_; }
  std::string to_string() const { return format_bits(bits_); }

  friend bool operator==(const Address&, const Address&) = default;

 private:
  BitStream bits_;
};

struct DecoderConfig {
  Architecture architecture = Architecture::Lpsd;
  std::size_t n = 8;
  std::size_t m = 0;
  // Number of trailing functional stages; stages below n - effective_length
  // are bypassed (pulled up).
  std::size_t effective_length = 8;
  std::size_t layer_cap = kDefaultLayerCap;
  std::size_t max_capacity = kDefaultMaxCapacity;

  static DecoderConfig legacy(std::size_t n);
  static DecoderConfig lpsd(std::size_t n, std::size_t m = 0);

  std::size_t layers() const { return architecture == Architecture::Lpsd ? m + 1 : 1; }
  std::size_t first_functional_stage() const { return n - effective_length; }

  // Throws ConfigError on any violated invariant.
  void validate() const;
};

// Returns a copy of `config` decoding only the trailing `l` address bits.
DecoderConfig set_effective_length(const DecoderConfig& config, std::size_t l);

// G-block function: c AND (a == b).
constexpr Bit g_block_eval(Bit a, Bit b, Bit c) { return static_cast<Bit>(c && (a == b)); }

struct ActivityDelta {
  std::uint64_t ff_toggles = 0;
  std::uint64_t ff_enable_events = 0;
  // Clock edges delivered to flip-flop clock pins. Every flip-flop receives
  // one per cycle whether or not its enable is asserted.
  std::uint64_t ff_clock_events = 0;
  std::uint64_t gate_transitions = 0;

  ActivityDelta& operator+=(const ActivityDelta& o) {
    ff_toggles += o.ff_toggles;
    ff_enable_events += o.ff_enable_events;
    ff_clock_events += o.ff_clock_events;
    gate_transitions += o.gate_transitions;
    return *this;
  }
};

struct StepOutcome {
  bool wake = false;
  ActivityDelta delta;
};

struct ActivityReport {
  std::uint64_t cycles = 0;
  std::uint64_t wakes = 0;
  ActivityDelta events;
  // occupancy[j][i]: cycles after which flip-flop i of layer j held 1.
  std::vector<std::vector<std::uint64_t>> occupancy;
};

// Low-power sequence decoder with m + 1 redundant layers. Flip-flop (j, i) is
// set when the most recent bits aligned to A_b..A_i differ from them in
// exactly j positions (b = first functional stage).
class LpsdDecoder {
 public:
  LpsdDecoder(const DecoderConfig& config, const Address& address);

  void reset();
  StepOutcome step(Bit input);

  const DecoderConfig& config() const { return config_; }
  std::uint64_t cycle() const { return cycle_; }
  std::span<const StageMask> layers() const { return q_; }
  bool q(std::size_t layer, std::size_t stage) const { return q_[layer].test(stage); }

 private:
  struct GateState {
    StageMask gated_input, match_out, cross_gated_input, cross_match_out, enable_xor;
  };

  DecoderConfig config_;
  StageMask address_ones_, address_zeros_;
  StageMask functional_, above_first_, first_, bypassed_;
  std::vector<StageMask> q_;
  std::vector<StageMask> next_;  // scratch, swapped with q_ every step
  std::vector<GateState> gates_;
  std::uint64_t cycle_ = 0;
};

// Shift-register correlator: the last n bits are compared to the address
// through an XNOR row and an AND tree every cycle.
class LegacyDecoder {
 public:
  LegacyDecoder(const DecoderConfig& config, const Address& address);

  void reset();
  StepOutcome step(Bit input);

  const DecoderConfig& config() const { return config_; }
  std::uint64_t cycle() const { return cycle_; }
  // Bit 0 holds the newest input, bit n-1 the oldest.
  const StageMask& shift_register() const { return shift_reg_; }
  const StageMask& xnor_outputs() const { return xnor_; }
  // Register cell i is compared against A_{n-1-i}, the bit it holds once the
  // whole address has been shifted in.
  const StageMask& aligned_address() const { return aligned_address_; }

 private:
  DecoderConfig config_;
  StageMask aligned_address_;
  StageMask shift_reg_, xnor_;
  std::vector<StageMask> tree_levels_;  // AND outputs per tree level
  std::vector<StageMask> partner_masks_;
  std::vector<StageMask> node_masks_;
  std::uint64_t cycle_ = 0;
};

class Decoder {
 public:
  Decoder(const DecoderConfig& config, const Address& address);

  void reset();
  StepOutcome step(Bit input);
  const DecoderConfig& config() const;

  // Per-layer flip-flop contents (the shift register for Legacy).
  std::vector<StageMask> flip_flops() const;

 private:
  std::variant<LegacyDecoder, LpsdDecoder> impl_;
};

struct RunResult {
  BitStream wake_trace;
  ActivityReport activity;
};

// Resets a decoder, feeds `stream` and records wake output per cycle.
RunResult run_stream(const DecoderConfig& config, const Address& address, std::span<const Bit> stream);

// Brute-force reference: output[t] = 1 iff t >= l-1 and the last l stream bits
// differ from the last l address bits in at most m positions.
BitStream wake_oracle(const Address& address, std::span<const Bit> stream, std::size_t m, std::size_t l);

}  // namespace wurkit
