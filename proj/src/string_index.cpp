#include "jpm/string_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jpm {

namespace {

std::size_t default_block(std::size_t n) {
  auto b = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (b * b < n) ++b;
  return std::max<std::size_t>(b, 1);
}

// Every window of [lo, hi), all lengths, straight from the prefix sums.
template <class Relax>
void scan_windows(std::span<const Cost> prefix, std::size_t lo, std::size_t hi, Relax&& relax) {
  for (std::size_t len = 1; len <= hi - lo; ++len) {
    Cost best_lo = kInf;
    Cost best_hi = kNegInf;
    for (std::size_t st = lo; st + len <= hi; ++st) {
      const Cost c = prefix[st + len] - prefix[st];
      best_lo = std::min(best_lo, c);
      best_hi = std::max(best_hi, c);
    }
    relax(len, best_lo, best_hi);
  }
}

std::vector<Cost> prefix_sums(std::span<const Cost> values) {
  std::vector<Cost> prefix(values.size() + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) prefix[i + 1] = prefix[i] + values[i];
  return prefix;
}

}  // namespace

BinaryString::BinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("BinaryString: empty text");
  prefix_.assign(bits_.size() + 1, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw std::invalid_argument("BinaryString: position " + std::to_string(i) + " is not 0/1");
    }
    prefix_[i + 1] = prefix_[i] + bits_[i];
  }
}

BinaryString BinaryString::from_text(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("BinaryString: character " + std::to_string(i + 1) +
                                  " is not '0' or '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return BinaryString(std::move(bits));
}

std::string BinaryString::to_text() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

BlockPartition::BlockPartition(const BinaryString& text, std::size_t block_length)
    : block_(block_length), prefix_(text.prefix_ones().begin(), text.prefix_ones().end()) {
  if (block_ == 0) throw std::invalid_argument("BlockPartition: block length must be positive");
  count_ = (text.size() + block_ - 1) / block_;
}

std::size_t BlockPartition::block_size(std::size_t i) const noexcept {
  return std::min(block_, text_length() - block_begin(i));
}

Cost BlockPartition::suffix_ones(std::size_t i, std::size_t k, Semiring s) const noexcept {
  if (k > block_size(i)) return absorbing(s);
  const std::size_t end = block_begin(i) + block_size(i);
  return ones(end - k, end);
}

Cost BlockPartition::prefix_ones(std::size_t j, std::size_t k, Semiring s) const noexcept {
  if (k > block_size(j)) return absorbing(s);
  return ones(block_begin(j), block_begin(j) + k);
}

Cost BlockPartition::interior_ones(std::size_t i, std::size_t j) const noexcept {
  return ones(block_begin(i + 1), block_begin(j));
}

CostMatrix cross_table(const BlockPartition& partition, std::size_t l, Semiring s,
                       const ProductKernel& kernel) {
  const std::size_t b = partition.block_length();
  const std::size_t m = partition.block_count();
  if (l == 0 || l > 2 * b) {
    throw std::invalid_argument("cross_table: l must lie in 1.." + std::to_string(2 * b));
  }
  // Column k of A / row k of B enumerates the split |q| + |p| = l.
  const bool short_span = l <= b;
  const std::size_t splits = short_span ? l + 1 : 2 * b - l + 1;
  CostMatrix a(m, splits, absorbing(s));
  CostMatrix bm(splits, m, absorbing(s));
  for (std::size_t k = 0; k < splits; ++k) {
    const std::size_t q_len = short_span ? k : k + l - b;
    const std::size_t p_len = short_span ? l - k : b - k;
    for (std::size_t i = 0; i < m; ++i) {
      a(i, k) = partition.suffix_ones(i, q_len, s);
      bm(k, i) = partition.prefix_ones(i, p_len, s);
    }
  }
  const CostMatrix c = tropical_product(a, bm, s, kernel);
  CostMatrix table(m, m, absorbing(s));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!is_absorbing(s, c(i, j))) table(i, j) = c(i, j) + partition.interior_ones(i, j);
    }
  }
  return table;
}

CrossBlockTables build_cross_tables(const BlockPartition& partition, const ProductKernel& kernel) {
  CrossBlockTables tables;
  tables.block_length = partition.block_length();
  for (std::size_t l = 1; l <= 2 * partition.block_length(); ++l) {
    tables.min_tables.push_back(cross_table(partition, l, Semiring::min_plus, kernel));
    tables.max_tables.push_back(cross_table(partition, l, Semiring::max_plus, kernel));
  }
  return tables;
}

Profile naive_profile(const BinaryString& text) {
  Profile profile = Profile::infeasible(text.size());
  scan_windows(text.prefix_ones(), 0, text.size(), [&](std::size_t len, Cost lo, Cost hi) {
    profile.relax_min(len, lo);
    profile.relax_max(len, hi);
  });
  return profile;
}

Profile blocked_profile(const BinaryString& text, std::optional<std::size_t> block,
                        const ProductKernel& kernel) {
  const std::size_t n = text.size();
  const BlockPartition partition(text, block.value_or(default_block(n)));
  const std::size_t b = partition.block_length();
  const std::size_t m = partition.block_count();
  Profile profile = Profile::infeasible(n);
  auto relax = [&](std::size_t len, Cost lo, Cost hi) {
    profile.relax_min(len, lo);
    profile.relax_max(len, hi);
  };

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t begin = partition.block_begin(i);
    scan_windows(text.prefix_ones(), begin, begin + partition.block_size(i), relax);
  }
  if (m < 2) return profile;

  // A window from block i to block j = i + g + 1 has length l + g * b.
  for (std::size_t l = 1; l <= 2 * b; ++l) {
    const CostMatrix lo = cross_table(partition, l, Semiring::min_plus, kernel);
    const CostMatrix hi = cross_table(partition, l, Semiring::max_plus, kernel);
    for (std::size_t g = 0; g + 1 < m; ++g) {
      const std::size_t len = l + g * b;
      if (len > n) break;
      for (std::size_t i = 0; i + g + 1 < m; ++i) {
        relax(len, lo(i, i + g + 1), hi(i, i + g + 1));
      }
    }
  }
  return profile;
}

namespace {

struct Recursion {
  std::span<const Cost> prefix;
  std::size_t cutoff;
  const ProductKernel& kernel;
  Profile& profile;

  void run(std::size_t lo, std::size_t hi) {
    if (hi - lo <= cutoff) {
      scan_windows(prefix, lo, hi, [&](std::size_t len, Cost a, Cost b) {
        profile.relax_min(len, a);
        profile.relax_max(len, b);
      });
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    run(lo, mid);
    run(mid, hi);
    // left[a]: 1s in the last a bits of [lo, mid); right[c]: first c bits of [mid, hi).
    CostVector left(mid - lo + 1);
    CostVector right(hi - mid + 1);
    for (std::size_t a = 0; a < left.size(); ++a) left[a] = prefix[mid] - prefix[mid - a];
    for (std::size_t c = 0; c < right.size(); ++c) right[c] = prefix[mid + c] - prefix[mid];
    const CostVector lows = min_plus_convolution_blocked(left, right, kernel);
    const CostVector highs = max_plus_convolution_blocked(left, right, kernel);
    for (std::size_t len = 1; len < lows.size(); ++len) {
      profile.relax_min(len, lows[len]);
      profile.relax_max(len, highs[len]);
    }
  }
};

void check_weights(std::span<const Cost> weights) {
  if (weights.empty()) throw std::invalid_argument("weighted sums: empty input");
  Cost total = 0;
  for (Cost w : weights) {
    if (w > kFiniteBound || w < -kFiniteBound) {
      throw std::invalid_argument("weighted sums: weight magnitude too large");
    }
    total += w < 0 ? -w : w;
    if (total > kFiniteBound) throw std::invalid_argument("weighted sums: total magnitude too large");
  }
}

}  // namespace

Profile recursive_profile(const BinaryString& text, std::size_t cutoff, const ProductKernel& kernel) {
  if (cutoff == 0) throw std::invalid_argument("recursive_profile: cutoff must be positive");
  Profile profile = Profile::infeasible(text.size());
  Recursion{text.prefix_ones(), cutoff, kernel, profile}.run(0, text.size());
  return profile;
}

CostVector anchored_min_profile(std::span<const Cost> left, std::span<const Cost> right,
                                Cost anchor_weight) {
  CostVector out = min_plus_convolution(left, right);
  for (Cost& x : out) x = tropical_mul(Semiring::min_plus, x, anchor_weight);
  return out;
}

CostVector anchored_max_profile(std::span<const Cost> left, std::span<const Cost> right,
                                Cost anchor_weight) {
  CostVector out = max_plus_convolution(left, right);
  for (Cost& x : out) x = tropical_mul(Semiring::max_plus, x, anchor_weight);
  return out;
}

CostVector naive_weighted_max_sums(std::span<const Cost> weights) {
  check_weights(weights);
  const std::vector<Cost> prefix = prefix_sums(weights);
  CostVector out(weights.size(), kNegInf);
  scan_windows(prefix, 0, weights.size(),
               [&](std::size_t len, Cost, Cost hi) { out[len - 1] = std::max(out[len - 1], hi); });
  return out;
}

CostVector weighted_max_sums(std::span<const Cost> weights, std::size_t cutoff,
                             const ProductKernel& kernel) {
  check_weights(weights);
  if (cutoff == 0) throw std::invalid_argument("weighted_max_sums: cutoff must be positive");
  const std::vector<Cost> prefix = prefix_sums(weights);
  CostVector out(weights.size(), kNegInf);
  auto relax = [&](std::size_t len, Cost v) { out[len - 1] = std::max(out[len - 1], v); };

  auto run = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (hi - lo <= cutoff) {
      scan_windows(prefix, lo, hi, [&](std::size_t len, Cost, Cost hi_sum) { relax(len, hi_sum); });
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
    CostVector left(mid - lo + 1);
    CostVector right(hi - mid + 1);
    for (std::size_t a = 0; a < left.size(); ++a) left[a] = prefix[mid] - prefix[mid - a];
    for (std::size_t c = 0; c < right.size(); ++c) right[c] = prefix[mid + c] - prefix[mid];
    const CostVector sums = max_plus_convolution_blocked(left, right, kernel);
    for (std::size_t len = 1; len < sums.size(); ++len) relax(len, sums[len]);
  };
  run(run, 0, weights.size());
  return out;
}

}  // namespace jpm
