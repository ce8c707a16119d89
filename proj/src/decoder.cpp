#include "wurkit/decoder.hpp"

#include <string>

#include "wurkit/errors.hpp"

namespace wurkit {

const char* to_string(Architecture arch) { return arch == Architecture::Legacy ? "legacy" : "lpsd"; }

Architecture parse_architecture(std::string_view name) {
  if (name == "legacy") return Architecture::Legacy;
  if (name == "lpsd") return Architecture::Lpsd;
  throw ConfigError("unknown architecture '" + std::string(name) + "' (expected legacy|lpsd)");
}

Address::Address(BitStream bits, std::size_t max_capacity) : bits_(std::move(bits)) {
  if (bits_.empty()) throw ConfigError("address must have at least one bit");
  if (bits_.size() > max_capacity)
    throw ConfigError("address length " + std::to_string(bits_.size()) + " exceeds capacity " +
                      std::to_string(max_capacity));
  for (Bit b : bits_)
    if (b > 1) throw ConfigError("address bits must be 0 or 1");
}

Address Address::parse(std::string_view text, std::size_t max_capacity) {
  return Address(parse_bits(text), max_capacity);
}

DecoderConfig DecoderConfig::legacy(std::size_t n) {
  DecoderConfig c;
  c.architecture = Architecture::Legacy;
  c.n = n;
  c.m = 0;
  c.effective_length = n;
  return c;
}

DecoderConfig DecoderConfig::lpsd(std::size_t n, std::size_t m) {
  DecoderConfig c;
  c.architecture = Architecture::Lpsd;
  c.n = n;
  c.m = m;
  c.effective_length = n;
  return c;
}

void DecoderConfig::validate() const {
  if (max_capacity > StageMask::kMaxBits)
    throw ConfigError("max capacity " + std::to_string(max_capacity) + " exceeds the supported " +
                      std::to_string(StageMask::kMaxBits) + " bits");
  if (n < 1 || n > max_capacity)
    throw ConfigError("address length n=" + std::to_string(n) + " outside [1, " + std::to_string(max_capacity) + "]");
  if (effective_length < 1 || effective_length > n)
    throw ConfigError("effective length l=" + std::to_string(effective_length) + " outside [1, " +
                      std::to_string(n) + "]");
  if (architecture == Architecture::Legacy) {
    if (m != 0) throw ConfigError("legacy decoder has no mismatch tolerance (m must be 0)");
    if (effective_length != n) throw ConfigError("legacy decoder cannot shorten its address");
  }
  if (m + 1 > layer_cap)
    throw ConfigError("m=" + std::to_string(m) + " needs " + std::to_string(m + 1) + " layers, cap is " +
                      std::to_string(layer_cap));
}

DecoderConfig set_effective_length(const DecoderConfig& config, std::size_t l) {
  if (config.architecture != Architecture::Lpsd)
    throw ConfigError("effective length can only be adjusted on an LPSD decoder");
  if (l < 1 || l > config.n)
    throw ConfigError("effective length l=" + std::to_string(l) + " outside [1, " + std::to_string(config.n) + "]");
  DecoderConfig out = config;
  out.effective_length = l;
  out.validate();
  return out;
}

namespace {

void check_address(const DecoderConfig& config, const Address& address) {
  config.validate();
  if (address.size() != config.n)
    throw ConfigError("address has " + std::to_string(address.size()) + " bits, config expects n=" +
                      std::to_string(config.n));
}

std::uint64_t transitions(const StageMask& before, const StageMask& after) { return (before ^ after).count(); }

}  // namespace

// ---------------------------------------------------------------------------
// LPSD

LpsdDecoder::LpsdDecoder(const DecoderConfig& config, const Address& address) : config_(config) {
  check_address(config_, address);
  const std::size_t n = config_.n;
  const std::size_t b = config_.first_functional_stage();
  address_ones_ = StageMask(n);
  for (std::size_t i = 0; i < n; ++i) address_ones_.set(i, address[i] != 0);
  address_zeros_ = ~address_ones_;
  functional_ = StageMask::range(n, b, n);
  above_first_ = StageMask::range(n, b + 1, n);
  first_ = StageMask::range(n, b, b + 1);
  bypassed_ = StageMask::range(n, 0, b);
  reset();
}

void LpsdDecoder::reset() {
  const std::size_t n = config_.n;
  q_.assign(config_.layers(), bypassed_);
  next_.assign(config_.layers(), StageMask(n));
  gates_.assign(config_.layers(), GateState{StageMask(n), StageMask(n), StageMask(n), StageMask(n), StageMask(n)});
  cycle_ = 0;
}

StepOutcome LpsdDecoder::step(Bit input) {
  const std::size_t layers = q_.size();
  const StageMask& match = input ? address_ones_ : address_zeros_;
  const StageMask& mismatch = input ? address_zeros_ : address_ones_;
  const StageMask broadcast = input ? StageMask::ones(config_.n) : StageMask(config_.n);

  StepOutcome out;
  ActivityDelta& d = out.delta;

  for (std::size_t j = 0; j < layers; ++j) {
    GateState& g = gates_[j];

    // c input: previous stage of the same layer. The first functional stage of
    // layer 0 has its c tied high.
    StageMask c_same = q_[j].shifted_up() & above_first_;
    if (j == 0) c_same |= first_;
    const StageMask gated = broadcast & c_same;
    const StageMask hit = c_same & match & functional_;
    StageMask value = hit;

    d.gate_transitions += transitions(g.gated_input, gated);
    d.gate_transitions += transitions(g.match_out, hit);
    g.gated_input = gated;
    g.match_out = hit;

    if (j > 0) {
      // Mismatch path: a thread in layer j-1 spends one mismatch to land here.
      StageMask c_cross = q_[j - 1].shifted_up() & above_first_;
      if (j == 1) c_cross |= first_;
      const StageMask cross_gated = broadcast & c_cross;
      const StageMask miss = c_cross & mismatch & functional_;
      value |= miss;
      d.gate_transitions += transitions(g.cross_gated_input, cross_gated);
      d.gate_transitions += transitions(g.cross_match_out, miss);
      g.cross_gated_input = cross_gated;
      g.cross_match_out = miss;
      // OR merging both paths; its output is the next flip-flop value.
      d.gate_transitions += transitions(q_[j] & functional_, value);
    }

    value |= bypassed_;
    const StageMask change = q_[j] ^ value;
    const StageMask enable_xor = change & above_first_;
    d.gate_transitions += transitions(g.enable_xor, enable_xor);
    g.enable_xor = enable_xor;

    d.ff_toggles += change.count();
    d.ff_enable_events += enable_xor.count() + 1;  // first flip-flop always enabled
    d.ff_clock_events += config_.n;
    next_[j] = value;
  }

  q_.swap(next_);
  const std::size_t last = config_.n - 1;
  for (const StageMask& layer : q_) out.wake = out.wake || layer.test(last);
  ++cycle_;
  return out;
}

// ---------------------------------------------------------------------------
// Legacy

LegacyDecoder::LegacyDecoder(const DecoderConfig& config, const Address& address) : config_(config) {
  check_address(config_, address);
  if (config_.architecture != Architecture::Legacy) throw ConfigError("LegacyDecoder requires the legacy architecture");
  const std::size_t n = config_.n;
  aligned_address_ = StageMask(n);
  for (std::size_t i = 0; i < n; ++i) aligned_address_.set(i, address[n - 1 - i] != 0);

  // Tree level k pairs nodes at multiples of 2^(k+1) with the node 2^k above.
  for (std::size_t span = 1; span < n; span *= 2) {
    StageMask partner(n), node(n);
    for (std::size_t p = 0; p < n; p += 2 * span) {
      node.set(p);
      if (p + span < n) partner.set(p);
    }
    partner_masks_.push_back(partner);
    node_masks_.push_back(node);
  }
  reset();
}

void LegacyDecoder::reset() {
  const std::size_t n = config_.n;
  shift_reg_ = StageMask(n);
  xnor_ = ~(shift_reg_ ^ aligned_address_);
  tree_levels_.clear();
  StageMask level = xnor_;
  for (std::size_t k = 0; k < partner_masks_.size(); ++k) {
    const std::size_t span = std::size_t{1} << k;
    level = (level & (level.shifted_down(span) | ~partner_masks_[k])) & node_masks_[k];
    tree_levels_.push_back(level);
  }
  cycle_ = 0;
}

StepOutcome LegacyDecoder::step(Bit input) {
  const std::size_t n = config_.n;
  StepOutcome out;
  ActivityDelta& d = out.delta;

  StageMask shifted = shift_reg_.shifted_up();
  shifted.set(0, input != 0);
  d.ff_toggles = transitions(shift_reg_, shifted);
  d.ff_clock_events = n;
  shift_reg_ = shifted;

  const StageMask xnor = ~(shift_reg_ ^ aligned_address_);
  d.gate_transitions += transitions(xnor_, xnor);
  xnor_ = xnor;

  StageMask level = xnor_;
  for (std::size_t k = 0; k < partner_masks_.size(); ++k) {
    const std::size_t span = std::size_t{1} << k;
    level = (level & (level.shifted_down(span) | ~partner_masks_[k])) & node_masks_[k];
    // Nodes without a partner are wires, not gates.
    d.gate_transitions += ((tree_levels_[k] ^ level) & partner_masks_[k]).count();
    tree_levels_[k] = level;
  }

  ++cycle_;
  // The reset contents are not received bits; no wake until the register
  // has been filled once.
  out.wake = level.test(0) && cycle_ >= n;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::variant<LegacyDecoder, LpsdDecoder> make_impl(const DecoderConfig& config, const Address& address) {
  if (config.architecture == Architecture::Legacy) return LegacyDecoder(config, address);
  return LpsdDecoder(config, address);
}

}  // namespace

Decoder::Decoder(const DecoderConfig& config, const Address& address) : impl_(make_impl(config, address)) {}

void Decoder::reset() {
  std::visit([](auto& d) { d.reset(); }, impl_);
}

StepOutcome Decoder::step(Bit input) {
  return std::visit([input](auto& d) { return d.step(input); }, impl_);
}

const DecoderConfig& Decoder::config() const {
  return std::visit([](const auto& d) -> const DecoderConfig& { return d.config(); }, impl_);
}

std::vector<StageMask> Decoder::flip_flops() const {
  if (const auto* legacy = std::get_if<LegacyDecoder>(&impl_)) return {legacy->shift_register()};
  const auto layers = std::get<LpsdDecoder>(impl_).layers();
  return {layers.begin(), layers.end()};
}

RunResult run_stream(const DecoderConfig& config, const Address& address, std::span<const Bit> stream) {
  if (stream.empty()) throw ConfigError("run_stream: stream is empty");
  Decoder decoder(config, address);
  RunResult result;
  result.wake_trace.reserve(stream.size());
  ActivityReport& report = result.activity;
  report.occupancy.assign(config.layers(), std::vector<std::uint64_t>(config.n, 0));

  for (Bit bit : stream) {
    const StepOutcome o = decoder.step(bit);
    result.wake_trace.push_back(o.wake ? 1 : 0);
    report.events += o.delta;
    report.wakes += o.wake;
    const auto ffs = decoder.flip_flops();
    for (std::size_t j = 0; j < ffs.size(); ++j) ffs[j].for_each_set([&](std::size_t i) { ++report.occupancy[j][i]; });
  }
  report.cycles = stream.size();
  return result;
}

}  // namespace wurkit
