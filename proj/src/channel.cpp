#include "wurkit/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wurkit/codebook.hpp"
#include "wurkit/errors.hpp"
#include "wurkit/rng.hpp"

namespace wurkit {

double ChannelModel::p_b() const { return ber(c, lambda); }

double ber(double c, double lambda) {
  if (!(c >= 0) || !(lambda >= 0)) throw ConfigError("ber: c and lambda must be non-negative");
  const double p = c * std::exp(-lambda);
  if (p > 1.0) throw ConfigError("ber: c*exp(-lambda) = " + std::to_string(p) + " exceeds 1");
  return p;
}

namespace {

void check_probability(double p_b) {
  if (!(p_b >= 0.0 && p_b <= 1.0)) throw ConfigError("bit error probability must lie in [0, 1]");
}

}  // namespace

double p_conv(std::size_t n, double p_b) {
  check_probability(p_b);
  return std::pow(1.0 - p_b, static_cast<double>(n));
}

double p_lpsd(std::size_t n, std::size_t m, double p_b) {
  check_probability(p_b);
  if (m > n) throw ConfigError("p_lpsd: m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
  if (m == n) return 1.0;
  if (p_b == 0.0) return 1.0;
  if (p_b == 1.0) return 0.0;  // every bit flipped, and m < n
  // Terms in log space, summed smallest-first.
  const double nn = static_cast<double>(n);
  const double log_q = std::log1p(-p_b);
  const double log_p = std::log(p_b);
  double sum = 0.0;
  for (std::size_t k = m + 1; k-- > 0;) {
    const double kk = static_cast<double>(k);
    const double log_term =
        std::lgamma(nn + 1) - std::lgamma(kk + 1) - std::lgamma(nn - kk + 1) + (nn - kk) * log_q + kk * log_p;
    sum += std::exp(log_term);
  }
  return std::min(sum, 1.0);
}

namespace {

Estimate finish(std::size_t hits, std::size_t trials) {
  Estimate e;
  e.trials = trials;
  e.value = static_cast<double>(hits) / static_cast<double>(trials);
  e.stderr_ = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
  return e;
}

// Feeds `sent` with i.i.d. flips into a reset decoder; true if it ever wakes.
bool transmit(Decoder& decoder, std::span<const Bit> sent, double p_b, Rng& rng) {
  decoder.reset();
  bool woke = false;
  for (Bit b : sent) {
    const Bit rx = uniform01(rng) < p_b ? static_cast<Bit>(b ^ 1u) : b;
    woke = decoder.step(rx).wake || woke;
  }
  return woke;
}

}  // namespace

Estimate monte_carlo_detection(const DecoderConfig& config, const Address& address, double p_b, std::size_t trials,
                               std::uint64_t seed) {
  check_probability(p_b);
  if (trials < 1) throw ConfigError("monte_carlo_detection: trials must be at least 1");
  Decoder decoder(config, address);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derived_rng(seed, t);
    hits += transmit(decoder, address.bits(), p_b, rng);
  }
  return finish(hits, trials);
}

Estimate false_wake_rate(const Codebook& codebook, const DecoderConfig& config, double p_b, std::size_t trials,
                         std::uint64_t seed) {
  check_probability(p_b);
  if (trials < 1) throw ConfigError("false_wake_rate: trials must be at least 1");
  const std::size_t k = codebook.size();
  if (k < 2) throw ConfigError("false_wake_rate: codebook needs at least two addresses");
  if (codebook.measured_distance() < 2 * config.m + 1)
    throw ConfigError("false_wake_rate: codebook distance " + std::to_string(codebook.measured_distance()) +
                      " is below 2m+1 = " + std::to_string(2 * config.m + 1));

  std::vector<Decoder> devices;
  devices.reserve(k);
  for (const Address& a : codebook.addresses()) devices.emplace_back(config, a);

  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t pair = t % (k * (k - 1));
    const std::size_t sender = pair / (k - 1);
    const std::size_t receiver = (sender + 1 + pair % (k - 1)) % k;
    Rng rng = derived_rng(seed, t);
    hits += transmit(devices[receiver], codebook[sender].bits(), p_b, rng);
  }
  return finish(hits, trials);
}

}  // namespace wurkit
