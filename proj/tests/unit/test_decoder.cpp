#include <doctest.h>

#include <sstream>

#include "wurkit/bits.hpp"
#include "wurkit/decoder.hpp"
#include "wurkit/errors.hpp"
#include "wurkit/power.hpp"
#include "wurkit/rng.hpp"

using namespace wurkit;

namespace {

BitStream trace(const DecoderConfig& c, const std::string& address, const std::string& stream) {
  return run_stream(c, Address::parse(address), parse_bits(stream)).wake_trace;
}

std::vector<std::size_t> wake_positions(const BitStream& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i]) out.push_back(i);
  return out;
}

// Distance between the last k stream bits and address bits [from, from + k).
std::size_t window_distance(std::span<const Bit> consumed, const Address& a, std::size_t from, std::size_t k) {
  std::size_t d = 0;
  for (std::size_t x = 0; x < k; ++x) d += consumed[consumed.size() - k + x] != a[from + x];
  return d;
}

}  // namespace

TEST_CASE("g-block truth table") {
  for (Bit a : {0, 1})
    for (Bit b : {0, 1})
      for (Bit c : {0, 1}) CHECK(g_block_eval(a, b, c) == static_cast<Bit>(c == 1 && a == b));
  CHECK(g_block_eval(1, 1, 1) == 1);
  CHECK(g_block_eval(0, 1, 1) == 0);
  CHECK(g_block_eval(1, 1, 0) == 0);
}

TEST_CASE("bit parsing and formatting") {
  CHECK(format_bits(parse_bits("0110")) == "0110");
  CHECK(parse_bits("").empty());
  try {
    parse_bits("10X1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
  CHECK(hamming_distance(parse_bits("1100"), parse_bits("1010")) == 2);
}

TEST_CASE("packed stream round trip") {
  Rng rng = derived_rng(7, 0);
  for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 1000u}) {
    const BitStream bits = random_bits(rng, len);
    std::stringstream s;
    write_packed(s, bits);
    CHECK(read_packed(s) == bits);
  }
  std::stringstream s;
  write_packed(s, parse_bits("101"));
  CHECK(s.str() == std::string("bits=3\n") + static_cast<char>(0xA0));
  std::stringstream truncated("bits=20\n\x01");
  CHECK_THROWS_AS(read_packed(truncated), ParseError);
}

TEST_CASE("address and config validation") {
  CHECK_THROWS_AS(Address::parse(""), ConfigError);
  CHECK_THROWS_AS(Address::parse(std::string(65, '1')), ConfigError);
  CHECK(Address::parse(std::string(65, '1'), 128).size() == 65);
  CHECK_THROWS_AS(Address::parse("10X1"), ParseError);

  DecoderConfig legacy = DecoderConfig::legacy(8);
  legacy.m = 1;
  CHECK_THROWS_AS(legacy.validate(), ConfigError);
  CHECK_THROWS_AS(set_effective_length(DecoderConfig::legacy(8), 4), ConfigError);
  CHECK_THROWS_AS(set_effective_length(DecoderConfig::lpsd(8), 0), ConfigError);
  CHECK_THROWS_AS(set_effective_length(DecoderConfig::lpsd(8), 9), ConfigError);
  CHECK_THROWS_AS(DecoderConfig::lpsd(8, 8).validate(), ConfigError);  // 9 layers > cap 8
  CHECK_NOTHROW(DecoderConfig::lpsd(8, 7).validate());
  DecoderConfig wide = DecoderConfig::lpsd(100);
  CHECK_THROWS_AS(wide.validate(), ConfigError);
  wide.max_capacity = 128;
  CHECK_NOTHROW(wide.validate());
  CHECK_THROWS_AS(LpsdDecoder(DecoderConfig::lpsd(4), Address::parse("101")), ConfigError);
}

TEST_CASE("reset state") {
  const Address a = Address::parse("10011101");
  SUBCASE("full length, all zero") {
    LpsdDecoder d(DecoderConfig::lpsd(8), a);
    for (std::size_t i = 0; i < 8; ++i) CHECK_FALSE(d.q(0, i));
  }
  SUBCASE("l=5 pulls up the three leading stages") {
    LpsdDecoder d(set_effective_length(DecoderConfig::lpsd(8), 5), a);
    for (std::size_t i = 0; i < 8; ++i) CHECK(d.q(0, i) == (i < 3));
  }
  SUBCASE("m=2 has three empty layers") {
    LpsdDecoder d(DecoderConfig::lpsd(8, 2), a);
    REQUIRE(d.layers().size() == 3);
    for (const StageMask& layer : d.layers()) CHECK_FALSE(layer.any());
  }
  SUBCASE("reset after running restores the initial state") {
    LpsdDecoder d(DecoderConfig::lpsd(8, 1), a);
    for (Bit b : parse_bits("1001110110")) d.step(b);
    d.reset();
    CHECK(d.cycle() == 0);
    for (const StageMask& layer : d.layers()) CHECK_FALSE(layer.any());
  }
}

TEST_CASE("lpsd examples") {
  CHECK(wake_positions(trace(DecoderConfig::lpsd(3), "101", "0101")) == std::vector<std::size_t>{3});
  CHECK(wake_positions(trace(DecoderConfig::lpsd(3), "101", "000000")).empty());
  // Arbitrary prefix, then the address: wake on its last bit, same as legacy.
  const std::string prefix = "011";
  const std::string addr = "10011101";
  CHECK(wake_positions(trace(DecoderConfig::lpsd(8), addr, prefix + addr)) == std::vector<std::size_t>{10});
  CHECK(wake_positions(trace(DecoderConfig::legacy(8), addr, prefix + addr)) == std::vector<std::size_t>{10});
  // One flipped bit is tolerated with m=1 only.
  const std::string flipped = "10111101";
  CHECK(wake_positions(trace(DecoderConfig::lpsd(8, 1), addr, flipped)) == std::vector<std::size_t>{7});
  CHECK(wake_positions(trace(DecoderConfig::lpsd(8, 0), addr, flipped)).empty());
}

TEST_CASE("run_stream basics") {
  const std::string addr = "10011101";
  CHECK(wake_positions(trace(DecoderConfig::lpsd(8), addr, addr)) == std::vector<std::size_t>{7});
  CHECK(wake_positions(trace(DecoderConfig::lpsd(8), addr, addr + addr)) == std::vector<std::size_t>{7, 15});
  // Overlapping matches are reported without a reset: 1010101 contains 101 at ends 2, 4, 6.
  CHECK(wake_positions(trace(DecoderConfig::lpsd(3), "101", "1010101")) == std::vector<std::size_t>{2, 4, 6});
  CHECK(wake_positions(trace(DecoderConfig::legacy(3), "101", "1010101")) == std::vector<std::size_t>{2, 4, 6});
  CHECK_THROWS_AS(run_stream(DecoderConfig::lpsd(3), Address::parse("101"), BitStream{}), ConfigError);
}

TEST_CASE("shortened address matches the suffix") {
  const DecoderConfig c = set_effective_length(DecoderConfig::lpsd(8), 4);
  CHECK(wake_positions(trace(c, "10011101", "0001101")) == std::vector<std::size_t>{6});
  CHECK(wake_positions(trace(c, "10011101", "1001")).empty());
  CHECK(wake_positions(trace(set_effective_length(DecoderConfig::lpsd(8), 8), "10011101", "10011101")) ==
        std::vector<std::size_t>{7});
}

TEST_CASE("oracle examples") {
  const Address a = Address::parse("1111");
  CHECK(format_bits(wake_oracle(a, parse_bits("1111"), 0, 4)) == "0001");
  CHECK(format_bits(wake_oracle(a, parse_bits("1101"), 1, 4)) == "0001");
  CHECK(format_bits(wake_oracle(a, parse_bits("1001"), 1, 4)) == "0000");
}

TEST_CASE("legacy register holds the last n bits and the xnor row follows it") {
  const Address a = Address::parse("10011101");
  LegacyDecoder d(DecoderConfig::legacy(8), a);
  Rng rng = derived_rng(3, 0);
  const BitStream s = random_bits(rng, 300);
  for (std::size_t t = 0; t < s.size(); ++t) {
    d.step(s[t]);
    for (std::size_t i = 0; i < 8; ++i) {
      const Bit expected = t >= i ? s[t - i] : 0;  // bit 0 newest
      CHECK(d.shift_register().test(i) == (expected == 1));
      CHECK(d.xnor_outputs().test(i) == (d.shift_register().test(i) == d.aligned_address().test(i)));
    }
  }
  // The aligned address is the stored address reversed (oldest bit on top).
  for (std::size_t i = 0; i < 8; ++i) CHECK(d.aligned_address().test(i) == (a[7 - i] == 1));
}

TEST_CASE("legacy does not wake on reset zeros") {
  // All-zero address would otherwise match the cleared register on cycle 0.
  CHECK(wake_positions(trace(DecoderConfig::legacy(4), "0000", "0000")) == std::vector<std::size_t>{3});
  CHECK(wake_positions(trace(DecoderConfig::lpsd(4), "0000", "0000")) == std::vector<std::size_t>{3});
}

TEST_CASE("layer semantics, probed every cycle") {
  Rng rng = derived_rng(11, 0);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + uniform_index(rng, 9);
    const std::size_t m = uniform_index(rng, std::min<std::size_t>(n, 3) + 1);
    const std::size_t l = 1 + uniform_index(rng, n);
    const Address a(random_bits(rng, n));
    const DecoderConfig c = set_effective_length(DecoderConfig::lpsd(n, m), l);
    LpsdDecoder d(c, a);
    const std::size_t b = n - l;
    // Bias toward the address so deep layers get exercised.
    BitStream consumed;
    for (int t = 0; t < 200; ++t) {
      const Bit bit = uniform01(rng) < 0.7 ? a[b + uniform_index(rng, l)] : random_bit(rng);
      consumed.push_back(bit);
      d.step(bit);
      for (std::size_t j = 0; j <= m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          bool expected = true;
          if (i >= b) {
            const std::size_t k = i - b + 1;
            expected = consumed.size() >= k && window_distance(consumed, a, b, k) == j;
          }
          REQUIRE_MESSAGE(d.q(j, i) == expected, "n=" << n << " m=" << m << " l=" << l << " j=" << j << " i=" << i);
        }
    }
  }
}

TEST_CASE("random traces agree with the oracle (small scale)") {
  Rng rng = derived_rng(5, 0);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 1 + uniform_index(rng, 20);
    const Address a(random_bits(rng, n));
    const BitStream s = random_bits(rng, 2000);
    const BitStream oracle0 = wake_oracle(a, s, 0, n);
    CHECK(run_stream(DecoderConfig::lpsd(n), a, s).wake_trace == oracle0);
    CHECK(run_stream(DecoderConfig::legacy(n), a, s).wake_trace == oracle0);
    const std::size_t m = 1 + uniform_index(rng, 2);
    if (m < n) CHECK(run_stream(DecoderConfig::lpsd(n, m), a, s).wake_trace == wake_oracle(a, s, m, n));
  }
}

TEST_CASE("activity bookkeeping") {
  Rng rng = derived_rng(9, 0);
  for (std::size_t n : {4u, 8u, 16u}) {
    for (std::size_t m : {0u, 1u, 2u}) {
      const DecoderConfig c = DecoderConfig::lpsd(n, m);
      const Address a(random_bits(rng, n));
      Decoder d(c, a);
      const std::uint64_t ffs = cell_inventory(c).flip_flops;
      for (int t = 0; t < 500; ++t) {
        const StepOutcome o = d.step(random_bit(rng));
        CHECK(o.delta.ff_toggles <= ffs);
        CHECK(o.delta.ff_enable_events <= ffs);
        CHECK(o.delta.ff_clock_events == ffs);
        // First stage of each layer is always enabled, the rest only on change.
        const std::uint64_t layers = m + 1;
        CHECK(o.delta.ff_enable_events >= layers);
        CHECK(o.delta.ff_enable_events - layers <= o.delta.ff_toggles);
        CHECK(o.delta.ff_enable_events >= o.delta.ff_toggles);
      }
    }
  }
}

TEST_CASE("occupancy counts set flip-flops per cycle") {
  const Address a = Address::parse("10");
  const RunResult r = run_stream(set_effective_length(DecoderConfig::lpsd(2), 1), a, parse_bits("0001"));
  // Stage 0 bypassed: set on every cycle. Stage 1 set when the input equals A_1 = 0.
  CHECK(r.activity.occupancy[0][0] == 4);
  CHECK(r.activity.occupancy[0][1] == 3);
  CHECK(r.activity.cycles == 4);
  CHECK(r.activity.wakes == 3);
}

TEST_CASE("lpsd switches less than legacy on random input") {
  for (std::size_t n : {8u, 16u, 32u, 64u}) {
    Rng rng = derived_rng(21, n);
    const Address a(random_bits(rng, n));
    const BitStream s = random_bits(rng, 20000);
    const ActivityDelta lp = run_stream(DecoderConfig::lpsd(n), a, s).activity.events;
    const ActivityDelta lg = run_stream(DecoderConfig::legacy(n), a, s).activity.events;
    CHECK(lp.ff_toggles + lp.gate_transitions < lg.ff_toggles + lg.gate_transitions);
  }
}

TEST_CASE("determinism") {
  Rng rng = derived_rng(2, 0);
  const Address a(random_bits(rng, 16));
  const BitStream s = random_bits(rng, 5000);
  const RunResult x = run_stream(DecoderConfig::lpsd(16, 2), a, s);
  const RunResult y = run_stream(DecoderConfig::lpsd(16, 2), a, s);
  CHECK(x.wake_trace == y.wake_trace);
  CHECK(x.activity.events.ff_toggles == y.activity.events.ff_toggles);
  CHECK(x.activity.events.gate_transitions == y.activity.events.gate_transitions);
  CHECK(x.activity.occupancy == y.activity.occupancy);
}
