#include "wurkit/decoder.hpp"
#include "wurkit/errors.hpp"

namespace wurkit {

BitStream wake_oracle(const Address& address, std::span<const Bit> stream, std::size_t m, std::size_t l) {
  const std::size_t n = address.size();
  if (l < 1 || l > n) throw ConfigError("wake_oracle: l outside [1, n]");
  const auto suffix = address.bits().subspan(n - l);
  BitStream out(stream.size(), 0);
  for (std::size_t t = l - 1; t < stream.size(); ++t) {
    const auto window = stream.subspan(t + 1 - l, l);
    out[t] = hamming_distance(window, suffix) <= m ? 1 : 0;
  }
  return out;
}

}  // namespace wurkit
