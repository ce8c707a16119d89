#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "wurkit/decoder.hpp"

namespace wurkit {

// Equal-length addresses with a guaranteed pairwise Hamming distance.
class Codebook {
 public:
  Codebook(std::size_t n, std::size_t min_distance, std::vector<Address> addresses);

  std::size_t n() const { return n_; }
  std::size_t min_distance() const { return min_distance_; }
  std::size_t size() const { return addresses_.size(); }
  const std::vector<Address>& addresses() const { return addresses_; }
  const Address& operator[](std::size_t i) const { return addresses_[i]; }

  // Smallest pairwise distance actually present (n + 1 for a single entry).
  std::size_t measured_distance() const;

  // Header line "n=<n> d=<distance>", then one address per line.
  void write(std::ostream& out) const;
  static Codebook read(std::istream& in);

 private:
  std::size_t n_;
  std::size_t min_distance_;
  std::vector<Address> addresses_;
};

// Greedy lexicode: scans n-bit words in lexicographic order and keeps each
// word at distance >= 2m+1 from all kept words, stopping at `count`. Throws
// InfeasibleError naming the binding bound when `count` exceeds what is
// achievable. Supports n <= 64.
Codebook build_codebook(std::size_t count, std::size_t n, std::size_t m);

}  // namespace wurkit
