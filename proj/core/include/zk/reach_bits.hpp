#pragma once

#include <cstdint>
#include <vector>

namespace zk {

/// Reachable subset sums 0..max_value as a packed bitset. Starts as {0}.
class ReachBits {
 public:
  explicit ReachBits(std::uint64_t max_value) : bits_(max_value + 1), words_((bits_ + 63) / 64, 0) {
    words_[0] = 1;
  }

  [[nodiscard]] std::uint64_t max_value() const noexcept { return bits_ - 1; }

  [[nodiscard]] bool test(std::uint64_t i) const noexcept {
    return i < bits_ && ((words_[i / 64] >> (i % 64)) & 1U);
  }

  // this |= this << v, truncated to the tracked range; adds item v at most once.
  void shift_or(std::uint64_t v) noexcept {
    if (v >= bits_) return;
    const std::size_t ws = v / 64;
    const unsigned bs = v % 64;
    for (std::size_t i = words_.size(); i-- > ws;) {
      std::uint64_t x = words_[i - ws] << bs;
      if (bs != 0 && i > ws) x |= words_[i - ws - 1] >> (64 - bs);
      words_[i] |= x;
    }
    const unsigned tail = bits_ % 64;
    if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  [[nodiscard]] bool all() const noexcept {
    const std::size_t full = bits_ / 64;
    for (std::size_t i = 0; i < full; ++i) {
      if (words_[i] != ~std::uint64_t{0}) return false;
    }
    const unsigned tail = bits_ % 64;
    return tail == 0 || words_[full] == (std::uint64_t{1} << tail) - 1;
  }

  [[nodiscard]] std::size_t bytes() const noexcept { return words_.size() * sizeof(std::uint64_t); }

 private:
  std::uint64_t bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace zk
