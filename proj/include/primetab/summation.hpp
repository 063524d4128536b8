#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace primetab {

/// Streaming pairwise summation with a fixed reduction tree.
///
/// Terms are summed naively in blocks of kBlock; completed blocks are merged
/// like a binary counter, so block i is always combined with block i ^ 1 at the
/// first level, and so on. The tree shape depends only on the number of terms,
/// which makes results bit-reproducible. Error grows as O(log n) instead of
/// O(n) for plain accumulation.
template <class T>
class PairwiseAccumulator {
 public:
  static constexpr std::size_t kBlock = 64;

  void add(const T& x) {
    block_ += x;
    if (++in_block_ == kBlock) flush_block();
  }

  /// Sum of all terms added so far. Does not disturb the reduction tree.
  T value() const {
    T total = block_;
    for (std::size_t level = 0; level < kLevels; ++level) {
      if (occupied_ & (std::size_t{1} << level)) total = levels_[level] + total;
    }
    return total;
  }

  std::size_t count() const noexcept { return blocks_ * kBlock + in_block_; }

 private:
  static constexpr std::size_t kLevels = 64;

  void flush_block() {
    T carry = block_;
    block_ = T{};
    in_block_ = 0;
    ++blocks_;
    std::size_t level = 0;
    while (occupied_ & (std::size_t{1} << level)) {
      carry = levels_[level] + carry;
      levels_[level] = T{};
      occupied_ &= ~(std::size_t{1} << level);
      ++level;
    }
    levels_[level] = carry;
    occupied_ |= std::size_t{1} << level;
  }

  std::array<T, kLevels> levels_{};
  std::size_t occupied_ = 0;
  T block_{};
  std::size_t in_block_ = 0;
  std::size_t blocks_ = 0;
};

template <class T>
T pairwise_sum(std::span<const T> xs) {
  PairwiseAccumulator<T> acc;
  for (const auto& x : xs) acc.add(x);
  return acc.value();
}

}  // namespace primetab
