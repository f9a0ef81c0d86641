#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jpm/minplus.hpp"
#include "jpm/profile.hpp"

namespace jpm {

// A non-empty binary text with cumulative 1-counts.
class BinaryString {
 public:
  // Throws std::invalid_argument on an empty sequence or a value other than 0/1.
  explicit BinaryString(std::vector<std::uint8_t> bits);

  // Accepts exactly the characters '0' and '1'.
  static BinaryString from_text(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t bit(std::size_t i) const noexcept { return bits_[i]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  // prefix_ones()[i] = number of 1s among the first i bits; length n + 1.
  std::span<const Cost> prefix_ones() const noexcept { return prefix_; }

  // Number of 1s in [begin, end).
  Cost ones(std::size_t begin, std::size_t end) const noexcept { return prefix_[end] - prefix_[begin]; }

  std::string to_text() const;

 private:
  std::vector<std::uint8_t> bits_;
  std::vector<Cost> prefix_;
};

// The text cut into m = ceil(n/b) consecutive blocks of length b; only the
// last block may be shorter.
class BlockPartition {
 public:
  BlockPartition(const BinaryString& text, std::size_t block_length);

  std::size_t text_length() const noexcept { return prefix_.size() - 1; }
  std::size_t block_length() const noexcept { return block_; }
  std::size_t block_count() const noexcept { return count_; }
  std::size_t block_begin(std::size_t i) const noexcept { return i * block_; }
  std::size_t block_size(std::size_t i) const noexcept;

  // 1s in the last k bits of block i, or kInf/kNegInf (per semiring) when k
  // exceeds the block.
  Cost suffix_ones(std::size_t i, std::size_t k, Semiring s) const noexcept;
  // 1s in the first k bits of block j, same sentinel rule.
  Cost prefix_ones(std::size_t j, std::size_t k, Semiring s) const noexcept;
  // 1s in the full blocks strictly between i and j (i < j).
  Cost interior_ones(std::size_t i, std::size_t j) const noexcept;

  Cost ones(std::size_t begin, std::size_t end) const noexcept { return prefix_[end] - prefix_[begin]; }

 private:
  std::size_t block_;
  std::size_t count_;
  std::vector<Cost> prefix_;
};

// tables[l - 1] is the m x m matrix C_l: entry (i, j), i < j, is the best
// 1-count of a substring made of a suffix q of block i, the full blocks
// i+1..j-1 and a prefix p of block j with |q| + |p| = l. Both q and p may be
// empty when l <= b; both are non-empty when l > b. Cells with i >= j, or
// with no admissible split, hold the sentinel.
struct CrossBlockTables {
  std::size_t block_length = 0;
  std::vector<CostMatrix> min_tables;
  std::vector<CostMatrix> max_tables;

  const CostMatrix& min_table(std::size_t l) const { return min_tables.at(l - 1); }
  const CostMatrix& max_table(std::size_t l) const { return max_tables.at(l - 1); }
};

// One C_l under one semiring; 1 <= l <= 2b.
CostMatrix cross_table(const BlockPartition& partition, std::size_t l, Semiring s,
                       const ProductKernel& kernel = {});
CrossBlockTables build_cross_tables(const BlockPartition& partition,
                                    const ProductKernel& kernel = {});

Profile naive_profile(const BinaryString& text);

// Block decomposition with cross-block tables; block defaults to ceil(sqrt(n)).
Profile blocked_profile(const BinaryString& text, std::optional<std::size_t> block = std::nullopt,
                        const ProductKernel& kernel = {});

inline constexpr std::size_t kRecursionCutoff = 64;

// Midpoint recursion; windows crossing the midpoint come from one min-plus
// and one max-plus convolution per level. Ranges of length <= cutoff are
// scanned directly (cutoff >= 1).
Profile recursive_profile(const BinaryString& text, std::size_t cutoff = kRecursionCutoff,
                          const ProductKernel& kernel = {});

// Extrema restricted to windows that contain a fixed anchor position.
// left[a] is the cost of taking a positions to the left of the anchor and
// right[c] of taking c positions to its right (left[0] = right[0] = 0).
// Entry k of the result describes windows of size k + 1.
CostVector anchored_min_profile(std::span<const Cost> left, std::span<const Cost> right,
                                Cost anchor_weight);
CostVector anchored_max_profile(std::span<const Cost> left, std::span<const Cost> right,
                                Cost anchor_weight);

// Entry i - 1 is the largest total weight of a length-i substring. Weights
// may be negative; the sum of their magnitudes must not exceed kFiniteBound.
CostVector weighted_max_sums(std::span<const Cost> weights, std::size_t cutoff = kRecursionCutoff,
                             const ProductKernel& kernel = {});
CostVector naive_weighted_max_sums(std::span<const Cost> weights);

}  // namespace jpm
