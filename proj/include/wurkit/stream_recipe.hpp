#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wurkit/bits.hpp"
#include "wurkit/decoder.hpp"

namespace wurkit {

// Test-stream mix: fractions of the stream occupied by exact address copies,
// copies with one or two flipped bits, and copies with half their bits
// flipped. The rest is uniform random.
struct StreamRecipe {
  std::size_t length = 5000;
  double fraction_exact = 0.07;
  double fraction_near = 0.10;
  double fraction_half = 0.20;
  std::uint64_t seed = 1;

  static StreamRecipe uniform(std::size_t length, std::uint64_t seed) { return {length, 0.0, 0.0, 0.0, seed}; }
  void validate() const;
};

enum class CopyKind { Exact, Near, Half };

const char* to_string(CopyKind kind);

struct Placement {
  std::size_t start = 0;                 // index of the copy's first bit
  CopyKind kind = CopyKind::Exact;
  std::vector<std::size_t> flipped;      // offsets within the copy, ascending
  std::size_t end(std::size_t n) const { return start + n - 1; }
};

struct GeneratedStream {
  BitStream bits;
  std::vector<Placement> placements;  // ordered by start
};

// Copies are non-overlapping and separated by at least one random bit.
// Throws InfeasibleError when the copies do not fit in the stream.
GeneratedStream gen_test_stream(const Address& address, const StreamRecipe& recipe);

}  // namespace wurkit
