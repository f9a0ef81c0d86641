#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "jpm/minplus.hpp"

namespace jpm {

using NodeId = std::size_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Rooted tree with one integer label per node (0/1 for jumbled indexing,
// arbitrary weights for maximum sub-sums).
class LabeledTree {
 public:
  // parents[v] is v's parent or kNoNode for the root. Throws
  // std::invalid_argument unless this describes exactly one rooted,
  // connected, acyclic tree on at least one node.
  LabeledTree(std::vector<NodeId> parents, std::vector<Cost> labels);

  std::size_t size() const noexcept { return parents_.size(); }
  NodeId root() const noexcept { return root_; }
  NodeId parent(NodeId v) const noexcept { return parents_[v]; }
  std::span<const NodeId> children(NodeId v) const noexcept { return children_[v]; }
  Cost label(NodeId v) const noexcept { return labels_[v]; }
  std::span<const Cost> labels() const noexcept { return labels_; }
  std::span<const NodeId> parents() const noexcept { return parents_; }

  bool has_binary_labels() const noexcept;

  // Same undirected tree hanging from another root.
  LabeledTree rerooted(NodeId new_root) const;

 private:
  std::vector<NodeId> parents_;
  std::vector<Cost> labels_;
  std::vector<std::vector<NodeId>> children_;
  NodeId root_ = kNoNode;
};

// A tree in which every node has at most two children. A node with k > 2
// children keeps its first child and hands the rest to a chain of k - 2
// dummy nodes. Dummies have size weight 0 and label 0, so subgraph sizes and
// label sums are measured on original nodes only.
struct BinarizedTree {
  struct Node {
    NodeId parent = kNoNode;
    std::array<NodeId, 2> children{kNoNode, kNoNode};
    Cost label = 0;
    NodeId original = kNoNode;  // kNoNode for dummies
    std::size_t real_size = 0;  // original nodes in this subtree

    bool is_real() const noexcept { return original != kNoNode; }
    std::size_t size_weight() const noexcept { return is_real() ? 1 : 0; }
  };

  std::vector<Node> nodes;
  NodeId root = kNoNode;
  std::vector<NodeId> postorder;  // children before parents

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t real_count() const noexcept { return nodes[root].real_size; }
  std::size_t dummy_count() const noexcept { return nodes.size() - real_count(); }
};

BinarizedTree binarize(const LabeledTree& tree);

}  // namespace jpm
