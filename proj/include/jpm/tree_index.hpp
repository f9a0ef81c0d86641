#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <span>

#include "jpm/bitvec.hpp"
#include "jpm/micro_macro.hpp"
#include "jpm/minplus.hpp"
#include "jpm/profile.hpp"
#include "jpm/tree.hpp"

namespace jpm {

// Per-node arrays: entry i is the best label sum of a connected subgraph of
// the node's subtree that contains the node and has i original nodes; entry
// 0 (the node left out) is 0.
using NodeProfile = CostVector;

// Called with every node array a tree pipeline materialises.
using NodeProfileObserver = std::function<void(std::span<const Cost>)>;

// Array of a node from its two child arrays ({0} for a missing child). A
// real node (counts_size) adds its label and one unit of size; a dummy only
// merges its children.
NodeProfile combine_children(std::span<const Cost> left, std::span<const Cost> right, Cost label,
                             bool counts_size, Semiring s = Semiring::min_plus);

// The quadratic bottom-up DP. Entry i - 1 is the best label sum over all
// connected subgraphs with i original nodes.
CostVector simple_tree_dp(const BinarizedTree& tree, Semiring s,
                          const NodeProfileObserver& observer = {});

Profile simple_tree_profile(const BinarizedTree& tree, const NodeProfileObserver& observer = {});

// Thrown when a node array has a step outside {0, 1}.
class CorruptProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A node array with unit steps stored as its difference bits; entry i is
// recovered as rank1(i + 1).
class DeltaBits {
 public:
  explicit DeltaBits(RankBitvector bits) : bits_(std::move(bits)) {}

  std::size_t size() const noexcept { return bits_.size(); }
  Cost operator[](std::size_t i) const { return static_cast<Cost>(bits_.rank1(i + 1)); }
  const RankBitvector& bits() const noexcept { return bits_; }
  NodeProfile decode() const;

 private:
  RankBitvector bits_;
};

// Throws CorruptProfileError unless a[0] == 0 and every step is 0 or 1.
DeltaBits encode_delta(std::span<const Cost> a);

// Micro-macro pipeline with micro-tree bound r (default ceil(sqrt(n))).
// Labels must be 0/1. Equal to simple_tree_profile(binarize(tree)).
Profile tree_profile(const LabeledTree& tree, std::optional<std::size_t> r = std::nullopt,
                     const NodeProfileObserver& observer = {}, const ProductKernel& kernel = {});
Profile tree_profile(const BinarizedTree& tree, std::size_t r,
                     const NodeProfileObserver& observer = {}, const ProductKernel& kernel = {});

// Convolution of a short and a long operand: the short one is padded with the
// absorbing value to at least min_width, the long one is cut into chunks of
// that width and each chunk is convolved separately, its results shifted by
// the chunk offset.
CostVector chunked_convolution(std::span<const Cost> a, std::span<const Cost> b, Semiring s,
                               std::size_t min_width, const ProductKernel& kernel = {});

// One semiring of the micro-macro pipeline over an existing decomposition.
CostVector micro_macro_dp(const BinarizedTree& tree, const MicroMacroDecomposition& decomposition,
                          Semiring s, const NodeProfileObserver& observer = {},
                          const ProductKernel& kernel = {});

// Entry i - 1 is the largest weight sum of a connected subgraph with i nodes.
CostVector weighted_tree_max_sums(const LabeledTree& tree);

// Exhaustive enumeration of connected node subsets, for trees of at most
// max_n <= 63 nodes (std::invalid_argument otherwise). The visitor receives
// (subset size, label sum) once per subset.
void for_each_connected_subset(const LabeledTree& tree, std::size_t max_n,
                               const std::function<void(std::size_t, Cost)>& visit);

inline constexpr std::size_t kEnumerationLimit = 18;

Profile enumerate_connected_oracle(const LabeledTree& tree, std::size_t max_n = kEnumerationLimit);
CostVector enumerate_weighted_max_sums(const LabeledTree& tree, std::size_t max_n = kEnumerationLimit);

}  // namespace jpm
