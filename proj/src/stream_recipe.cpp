#include "wurkit/stream_recipe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wurkit/errors.hpp"
#include "wurkit/rng.hpp"

namespace wurkit {

void StreamRecipe::validate() const {
  if (length == 0) throw ConfigError("stream recipe: length must be positive");
  for (double f : {fraction_exact, fraction_near, fraction_half})
    if (!(f >= 0.0)) throw ConfigError("stream recipe: fractions must be non-negative");
  if (fraction_exact + fraction_near + fraction_half > 1.0 + 1e-12)
    throw ConfigError("stream recipe: fractions sum above 1");
}

const char* to_string(CopyKind kind) {
  switch (kind) {
    case CopyKind::Exact: return "exact";
    case CopyKind::Near: return "near";
    case CopyKind::Half: return "half";
  }
  return "?";
}

namespace {

std::size_t copies_for(double fraction, std::size_t length, std::size_t n) {
  return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(length) / static_cast<double>(n)));
}

// k distinct offsets from [0, n), ascending.
std::vector<std::size_t> pick_positions(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + uniform_index(rng, n - i)]);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

GeneratedStream gen_test_stream(const Address& address, const StreamRecipe& recipe) {
  recipe.validate();
  const std::size_t n = address.size();
  const std::size_t len = recipe.length;
  if (n > len) throw ConfigError("stream recipe: address longer than the stream");

  std::vector<CopyKind> kinds;
  kinds.insert(kinds.end(), copies_for(recipe.fraction_exact, len, n), CopyKind::Exact);
  kinds.insert(kinds.end(), copies_for(recipe.fraction_near, len, n), CopyKind::Near);
  kinds.insert(kinds.end(), copies_for(recipe.fraction_half, len, n), CopyKind::Half);
  const std::size_t k = kinds.size();
  if (k > 0 && k * n + (k - 1) > len)
    throw InfeasibleError("stream recipe: " + std::to_string(k) + " copies of " + std::to_string(n) +
                          " bits do not fit in " + std::to_string(len) + " bits");

  Rng rng = derived_rng(recipe.seed, 0);
  for (std::size_t i = k; i > 1; --i) std::swap(kinds[i - 1], kinds[uniform_index(rng, i)]);

  // Gap sizes: interior gaps get one mandatory separator, the remaining free
  // bits are split at k sorted random cut points.
  std::vector<std::size_t> gaps(k + 1, 0);
  if (k > 0) {
    const std::size_t spare = len - k * n - (k - 1);
    std::vector<std::size_t> cuts(k);
    for (auto& c : cuts) c = uniform_index(rng, spare + 1);
    std::sort(cuts.begin(), cuts.end());
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
      gaps[i] = cuts[i] - prev + (i > 0 ? 1 : 0);
      prev = cuts[i];
    }
    gaps[k] = spare - prev;
  }

  GeneratedStream out;
  out.bits.reserve(len);
  auto fill_random = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) out.bits.push_back(random_bit(rng));
  };
  for (std::size_t c = 0; c < k; ++c) {
    fill_random(gaps[c]);
    Placement p;
    p.start = out.bits.size();
    p.kind = kinds[c];
    if (p.kind == CopyKind::Near)
      p.flipped = pick_positions(rng, n, std::min<std::size_t>(n, 1 + (rng() & 1u)));
    else if (p.kind == CopyKind::Half)
      p.flipped = pick_positions(rng, n, n / 2);
    BitStream copy(address.bits().begin(), address.bits().end());
    for (std::size_t off : p.flipped) copy[off] ^= 1u;
    out.bits.insert(out.bits.end(), copy.begin(), copy.end());
    out.placements.push_back(std::move(p));
  }
  fill_random(gaps[k]);
  if (k == 0) fill_random(len - out.bits.size());
  return out;
}

}  // namespace wurkit
