#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jpm {

// Immutable bit sequence with constant-time rank.
//
// Bits are packed into 64-bit words and the directory stores, for every
// word, the number of 1s in all preceding words. rank1(i) is therefore one
// directory read plus one masked popcount. The directory costs 32 bits per
// 64-bit word, which caps the length at 2^32 - 1 bits.
class RankBitvector {
 public:
  RankBitvector();

  // Every element must be 0 or 1.
  explicit RankBitvector(std::span<const std::uint8_t> bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Number of 1s among the first i bits. Throws std::out_of_range if i > size().
  std::size_t rank1(std::size_t i) const;

  bool operator[](std::size_t i) const;

  std::size_t ones() const noexcept { return directory_.back(); }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> directory_;
};

RankBitvector build_rank(std::span<const std::uint8_t> bits);

}  // namespace jpm
