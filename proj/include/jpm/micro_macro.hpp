#pragma once

#include <cstddef>
#include <vector>

#include "jpm/tree.hpp"

namespace jpm {

// Partition of a binarized tree into connected micro trees of at most r
// nodes (dummies included), each touching the rest of the tree through at
// most two boundary nodes. The macro tree has one node per micro tree.
struct MicroMacroDecomposition {
  struct MicroTree {
    NodeId top = kNoNode;             // closest node to the root
    std::vector<NodeId> nodes;        // children before parents
    std::vector<NodeId> boundary;     // nodes adjacent to another micro tree
    std::size_t macro_parent = kNoNode;
    std::vector<std::size_t> macro_children;
  };

  // Upper bound on micro-tree count is max(1, kMicroTreeFactor * N / r) for a
  // binarized tree of N nodes.
  static constexpr std::size_t kMicroTreeFactor = 6;

  std::size_t micro_bound = 0;
  std::vector<MicroTree> micro_trees;  // every macro child precedes its parent
  std::vector<std::size_t> micro_of;   // node -> index into micro_trees

  std::size_t macro_root() const noexcept { return micro_trees.size() - 1; }
};

// Greedy bottom-up carving. Throws std::invalid_argument if r == 0.
MicroMacroDecomposition micro_macro(const BinarizedTree& tree, std::size_t r);

}  // namespace jpm
