#include <doctest.h>

#include <bit>
#include <cmath>
#include <sstream>

#include "wurkit/bits.hpp"
#include "wurkit/codebook.hpp"
#include "wurkit/decoder.hpp"
#include "wurkit/errors.hpp"
#include "wurkit/rng.hpp"
#include "wurkit/stream_recipe.hpp"

using namespace wurkit;

TEST_CASE("all-zero fractions give a plain random stream") {
  const Address a = Address::parse("1011");
  const GeneratedStream g = gen_test_stream(a, StreamRecipe::uniform(1000, 4));
  CHECK(g.bits.size() == 1000);
  CHECK(g.placements.empty());
  std::size_t ones = 0;
  for (Bit b : g.bits) ones += b;
  CHECK(ones > 400);
  CHECK(ones < 600);
}

TEST_CASE("default recipe budgets") {
  Rng rng = derived_rng(1, 0);
  const Address a(random_bits(rng, 16));
  const GeneratedStream g = gen_test_stream(a, StreamRecipe{});
  REQUIRE(g.bits.size() == 5000);
  std::size_t exact = 0, near = 0, half = 0;
  for (const Placement& p : g.placements) {
    switch (p.kind) {
      case CopyKind::Exact: ++exact; CHECK(p.flipped.empty()); break;
      case CopyKind::Near: ++near; CHECK((p.flipped.size() == 1 || p.flipped.size() == 2)); break;
      case CopyKind::Half: ++half; CHECK(p.flipped.size() == 8); break;
    }
  }
  // 7% of 5000 = 350 bits -> 22 copies of 16 (352 bits); 500 -> 31; 1000 -> 62 or 63.
  CHECK(exact == 22);
  CHECK(near == 31);
  CHECK(half == 63);
  CHECK(std::abs(static_cast<double>(exact * 16) - 350.0) <= 16);
}

TEST_CASE("copies are faithful, disjoint and separated") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng = derived_rng(seed, 99);
    const std::size_t n = 4 + uniform_index(rng, 29);
    const Address a(random_bits(rng, n));
    StreamRecipe r;
    r.seed = seed;
    const GeneratedStream g = gen_test_stream(a, r);
    for (std::size_t c = 0; c < g.placements.size(); ++c) {
      const Placement& p = g.placements[c];
      REQUIRE(p.end(n) < g.bits.size());
      if (c > 0) CHECK(p.start >= g.placements[c - 1].end(n) + 2);
      std::size_t diff = 0;
      for (std::size_t x = 0; x < n; ++x) diff += g.bits[p.start + x] != a[x];
      CHECK(diff == p.flipped.size());
      for (std::size_t off : p.flipped) CHECK(g.bits[p.start + off] != a[off]);
    }
  }
}

TEST_CASE("same seed, same stream; different seed, different stream") {
  const Address a = Address::parse("1100101011110000");
  StreamRecipe r;
  const GeneratedStream x = gen_test_stream(a, r), y = gen_test_stream(a, r);
  CHECK(x.bits == y.bits);
  CHECK(x.placements.size() == y.placements.size());
  r.seed = 2;
  CHECK(gen_test_stream(a, r).bits != x.bits);
}

TEST_CASE("recipe errors") {
  const Address a = Address::parse("10101010");
  CHECK_THROWS_AS(gen_test_stream(a, StreamRecipe{0, 0, 0, 0, 1}), ConfigError);
  CHECK_THROWS_AS(gen_test_stream(a, StreamRecipe{100, 0.6, 0.6, 0, 1}), ConfigError);
  CHECK_THROWS_AS(gen_test_stream(a, StreamRecipe{4, 0, 0, 0, 1}), ConfigError);  // address longer than stream
  // 100% in copies of 8 bits leaves no room for separators.
  CHECK_THROWS_AS(gen_test_stream(a, StreamRecipe{80, 1.0, 0, 0, 1}), InfeasibleError);
}

TEST_CASE("embedded copies wake the decoder at their last bit") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng = derived_rng(seed, 5);
    const std::size_t n = 8 + uniform_index(rng, 25);
    const Address a(random_bits(rng, n));
    StreamRecipe r;
    r.seed = seed;
    const GeneratedStream g = gen_test_stream(a, r);
    const BitStream t0 = run_stream(DecoderConfig::lpsd(n, 0), a, g.bits).wake_trace;
    const BitStream t2 = run_stream(DecoderConfig::lpsd(n, 2), a, g.bits).wake_trace;
    for (const Placement& p : g.placements) {
      if (p.kind == CopyKind::Exact) CHECK(t0[p.end(n)] == 1);
      if (p.kind == CopyKind::Near) {
        CHECK(t0[p.end(n)] == 0);
        CHECK(t2[p.end(n)] == 1);
      }
    }
  }
}

TEST_CASE("codebook examples") {
  const Codebook two = build_codebook(2, 3, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].to_string() == "000");
  CHECK(two[1].to_string() == "111");

  const Codebook plain = build_codebook(5, 4, 0);
  const char* expected[] = {"0000", "0001", "0010", "0011", "0100"};
  for (std::size_t i = 0; i < 5; ++i) CHECK(plain[i].to_string() == expected[i]);

  try {
    build_codebook(3, 3, 1);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(std::string(e.what()).find("bound") != std::string::npos);
  }
}

TEST_CASE("3 words at distance 3 in 3 bits: exhaustive check agrees") {
  // Independent oracle: no triple of 3-bit words is pairwise at distance >= 3.
  bool found = false;
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = a + 1; b < 8; ++b)
      for (unsigned c = b + 1; c < 8; ++c)
        found = found || (std::popcount(a ^ b) >= 3 && std::popcount(a ^ c) >= 3 && std::popcount(b ^ c) >= 3);
  CHECK_FALSE(found);
}

TEST_CASE("codebook distance holds across sizes") {
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n : {12u, 16u, 20u}) {
      const Codebook book = build_codebook(8, n, m);
      CHECK(book.size() == 8);
      CHECK(book.measured_distance() >= 2 * m + 1);
    }
  // Lexicode at n=7, d=3 is the Hamming code: 16 words, and no more.
  CHECK(build_codebook(16, 7, 1).size() == 16);
  CHECK_THROWS_AS(build_codebook(17, 7, 1), InfeasibleError);
  CHECK_THROWS_AS(build_codebook(0, 8, 1), ConfigError);
  CHECK_THROWS_AS(build_codebook(2, 65, 1), ConfigError);
  // 64-bit words work.
  CHECK(build_codebook(4, 64, 2).measured_distance() >= 5);
}

TEST_CASE("codebook file round trip") {
  const Codebook book = build_codebook(6, 10, 1);
  std::stringstream s;
  book.write(s);
  CHECK(s.str().rfind("n=10 d=3\n", 0) == 0);
  const Codebook back = Codebook::read(s);
  CHECK(back.addresses() == book.addresses());
  CHECK(back.min_distance() == 3);

  std::stringstream bad_header("n=4\n0000\n");
  CHECK_THROWS_AS(Codebook::read(bad_header), ParseError);
  std::stringstream too_close("n=4 d=3\n0000\n0001\n");
  CHECK_THROWS_AS(Codebook::read(too_close), ConfigError);
  std::stringstream bad_bits("n=4 d=1\n0000\n01x1\n");
  CHECK_THROWS_AS(Codebook::read(bad_bits), ParseError);
}
