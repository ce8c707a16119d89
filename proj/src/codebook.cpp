#include "wurkit/codebook.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "wurkit/errors.hpp"

namespace wurkit {

Codebook::Codebook(std::size_t n, std::size_t min_distance, std::vector<Address> addresses)
    : n_(n), min_distance_(min_distance), addresses_(std::move(addresses)) {
  for (const Address& a : addresses_)
    if (a.size() != n_) throw ConfigError("codebook: all addresses must have n=" + std::to_string(n_) + " bits");
  if (measured_distance() < min_distance_)
    throw ConfigError("codebook: pairwise distance " + std::to_string(measured_distance()) + " below declared " +
                      std::to_string(min_distance_));
}

std::size_t Codebook::measured_distance() const {
  std::size_t best = n_ + 1;
  for (std::size_t i = 0; i < addresses_.size(); ++i)
    for (std::size_t j = i + 1; j < addresses_.size(); ++j)
      best = std::min(best, hamming_distance(addresses_[i].bits(), addresses_[j].bits()));
  return best;
}

void Codebook::write(std::ostream& out) const {
  out << "n=" << n_ << " d=" << min_distance_ << '\n';
  for (const Address& a : addresses_) out << a.to_string() << '\n';
}

Codebook Codebook::read(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("codebook: missing header", 0);
  std::size_t n = 0, d = 0;
  {
    std::istringstream hs(header);
    std::string n_tok, d_tok;
    hs >> n_tok >> d_tok;
    try {
      if (n_tok.rfind("n=", 0) != 0 || d_tok.rfind("d=", 0) != 0) throw std::invalid_argument("header");
      n = std::stoull(n_tok.substr(2));
      d = std::stoull(d_tok.substr(2));
    } catch (const std::exception&) {
      throw ParseError("codebook: header must be 'n=<n> d=<distance>', got '" + header + "'", 0);
    }
  }
  std::vector<Address> addresses;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    addresses.push_back(Address::parse(line, std::max<std::size_t>(n, 1)));
  }
  return Codebook(n, d, std::move(addresses));
}

namespace {

constexpr std::uint64_t kSearchBudget = std::uint64_t{1} << 32;

struct Bound {
  const char* name;
  double value;
};

// Tightest of the sphere-packing, Singleton and Plotkin bounds on A(n, d).
Bound capacity_bound(std::size_t n, std::size_t d) {
  const double nn = static_cast<double>(n);
  const std::size_t t = (d - 1) / 2;
  double log2_ball = 0;
  {
    double ball = 0;
    for (std::size_t k = 0; k <= t && k <= n; ++k)
      ball += std::exp(std::lgamma(nn + 1) - std::lgamma(static_cast<double>(k) + 1) -
                       std::lgamma(nn - static_cast<double>(k) + 1));
    log2_ball = std::log2(ball);
  }
  Bound best{"Hamming (sphere-packing)", std::floor(std::exp2(nn - log2_ball) + 1e-9)};
  const double singleton = d > n ? 1.0 : std::exp2(nn - static_cast<double>(d) + 1);
  if (singleton < best.value) best = {"Singleton", singleton};
  if (2 * d > n) {
    const double plotkin = 2.0 * std::floor(static_cast<double>(d) / static_cast<double>(2 * d - n));
    if (plotkin < best.value) best = {"Plotkin", plotkin};
  }
  return best;
}

Address word_to_address(std::uint64_t word, std::size_t n) {
  BitStream bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<Bit>((word >> (n - 1 - i)) & 1u);
  return Address(std::move(bits), n);
}

}  // namespace

Codebook build_codebook(std::size_t count, std::size_t n, std::size_t m) {
  if (count < 1) throw ConfigError("build_codebook: count must be at least 1");
  if (n < 1 || n > 64) throw ConfigError("build_codebook: n must lie in [1, 64]");
  const std::size_t d = 2 * m + 1;

  const Bound bound = capacity_bound(n, d);
  if (static_cast<double>(count) > bound.value)
    throw InfeasibleError("build_codebook: " + std::to_string(count) + " addresses exceed the " + bound.name +
                          " bound of " + std::to_string(static_cast<std::uint64_t>(bound.value)) + " at n=" +
                          std::to_string(n) + ", d=" + std::to_string(d));

  const std::uint64_t end = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  std::vector<std::uint64_t> kept;
  std::uint64_t scanned = 0;
  for (std::uint64_t w = 0; kept.size() < count; ++w) {
    if (n < 64 && w == end) break;
    if (++scanned > kSearchBudget)
      throw InfeasibleError("build_codebook: search budget exhausted after " + std::to_string(kept.size()) +
                            " addresses at n=" + std::to_string(n) + ", d=" + std::to_string(d));
    bool ok = true;
    for (std::uint64_t k : kept)
      if (static_cast<std::size_t>(std::popcount(k ^ w)) < d) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(w);
  }
  if (kept.size() < count)
    throw InfeasibleError("build_codebook: the greedy lexicode at n=" + std::to_string(n) + ", d=" +
                          std::to_string(d) + " holds only " + std::to_string(kept.size()) + " addresses");

  std::vector<Address> addresses;
  addresses.reserve(kept.size());
  for (std::uint64_t w : kept) addresses.push_back(word_to_address(w, n));
  return Codebook(n, d, std::move(addresses));
}

}  // namespace wurkit
