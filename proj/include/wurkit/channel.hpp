#pragma once

#include <cstddef>
#include <cstdint>

#include "wurkit/decoder.hpp"

namespace wurkit {

class Codebook;

// Bit error rate of an OOK envelope detector in AWGN: p_b = c * exp(-lambda).
struct ChannelModel {
  double c = 0;
  double lambda = 0;  // linear SNR at the detector input
  double p_b() const;
};

// Throws ConfigError for negative inputs or when c*exp(-lambda) exceeds 1.
double ber(double c, double lambda);

// Detection probability of an n-bit correlator that needs every bit right.
double p_conv(std::size_t n, double p_b);

// Detection probability when up to m of the n bits may be corrupted:
// sum_{k=0..m} C(n,k) (1-p_b)^(n-k) p_b^k.
double p_lpsd(std::size_t n, std::size_t m, double p_b);

struct Estimate {
  double value = 0;
  double stderr_ = 0;
  std::size_t trials = 0;
};

// Sends the device's own address through an i.i.d. bit-flip channel into a
// freshly reset decoder `trials` times and reports the wake fraction. Trial t
// draws from derived_rng(seed, t).
Estimate monte_carlo_detection(const DecoderConfig& config, const Address& address, double p_b, std::size_t trials,
                               std::uint64_t seed);

// Pages codeword A over the channel and runs device B's decoder (B != A).
// Trials cycle through all ordered pairs of distinct codewords.
Estimate false_wake_rate(const Codebook& codebook, const DecoderConfig& config, double p_b, std::size_t trials,
                         std::uint64_t seed);

}  // namespace wurkit
