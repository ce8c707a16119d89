#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace wurkit {

// Fixed-width bit vector indexed by decoder stage. Bit i is stage i. Widths up
// to kMaxBits are supported; bits at or above size() are always zero.
class StageMask {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxWords = 4;
  static constexpr std::size_t kMaxBits = kWordBits * kMaxWords;

  StageMask() = default;
  explicit StageMask(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits) {}

  static StageMask ones(std::size_t size) {
    StageMask m(size);
    for (std::size_t w = 0; w < m.words_; ++w) m.data_[w] = ~std::uint64_t{0};
    m.trim();
    return m;
  }

  // Bits [lo, hi) set.
  static StageMask range(std::size_t size, std::size_t lo, std::size_t hi) {
    StageMask m(size);
    for (std::size_t i = lo; i < hi && i < size; ++i) m.set(i);
    return m;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (data_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
    if (v)
      data_[i / kWordBits] |= bit;
    else
      data_[i / kWordBits] &= ~bit;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < kMaxWords; ++w) c += static_cast<std::size_t>(std::popcount(data_[w]));
    return c;
  }
  bool any() const { return (data_[0] | data_[1] | data_[2] | data_[3]) != 0; }

  // Stage i moves to stage i + 1; stage 0 becomes zero.
  StageMask shifted_up() const {
    StageMask r(size_);
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < kMaxWords; ++w) {
      r.data_[w] = (data_[w] << 1) | carry;
      carry = data_[w] >> (kWordBits - 1);
    }
    r.trim();
    return r;
  }

  // Stage i + k moves to stage i.
  StageMask shifted_down(std::size_t k) const {
    StageMask r(size_);
    const std::size_t ws = k / kWordBits;
    const std::size_t bs = k % kWordBits;
    for (std::size_t w = 0; w + ws < words_; ++w) {
      std::uint64_t v = data_[w + ws] >> bs;
      if (bs != 0 && w + ws + 1 < words_) v |= data_[w + ws + 1] << (kWordBits - bs);
      r.data_[w] = v;
    }
    return r;
  }

  StageMask operator~() const {
    StageMask r(size_);
    for (std::size_t w = 0; w < kMaxWords; ++w) r.data_[w] = ~data_[w];
    r.trim();
    return r;
  }
  StageMask& operator&=(const StageMask& o) {
    for (std::size_t w = 0; w < kMaxWords; ++w) data_[w] &= o.data_[w];
    return *this;
  }
  StageMask& operator|=(const StageMask& o) {
    for (std::size_t w = 0; w < kMaxWords; ++w) data_[w] |= o.data_[w];
    return *this;
  }
  StageMask& operator^=(const StageMask& o) {
    for (std::size_t w = 0; w < kMaxWords; ++w) data_[w] ^= o.data_[w];
    return *this;
  }
  friend StageMask operator&(StageMask a, const StageMask& b) { return a &= b; }
  friend StageMask operator|(StageMask a, const StageMask& b) { return a |= b; }
  friend StageMask operator^(StageMask a, const StageMask& b) { return a ^= b; }
  friend bool operator==(const StageMask& a, const StageMask& b) {
    if (a.size_ != b.size_) return false;
    return a.data_ == b.data_;
  }

  // Calls fn(i) for every set stage, ascending.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t v = data_[w];
      while (v) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(v)));
        v &= v - 1;
      }
    }
  }

 private:
  // Clears every bit at or above size(); the fixed-width loops rely on it.
  void trim() {
    const std::size_t tail = size_ % kWordBits;
    if (tail != 0 && words_ > 0) data_[words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    for (std::size_t w = words_; w < kMaxWords; ++w) data_[w] = 0;
  }

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::array<std::uint64_t, kMaxWords> data_{};
};

}  // namespace wurkit
