#include "jpm/tree.hpp"

#include <stdexcept>
#include <string>

namespace jpm {

LabeledTree::LabeledTree(std::vector<NodeId> parents, std::vector<Cost> labels)
    : parents_(std::move(parents)), labels_(std::move(labels)), children_(parents_.size()) {
  const std::size_t n = parents_.size();
  if (n == 0) throw std::invalid_argument("LabeledTree: no nodes");
  if (labels_.size() != n) throw std::invalid_argument("LabeledTree: label count differs from node count");
  for (NodeId v = 0; v < n; ++v) {
    const NodeId p = parents_[v];
    if (p == kNoNode) {
      if (root_ != kNoNode) throw std::invalid_argument("LabeledTree: more than one root");
      root_ = v;
    } else if (p >= n || p == v) {
      throw std::invalid_argument("LabeledTree: node " + std::to_string(v) + " has invalid parent");
    } else {
      children_[p].push_back(v);
    }
  }
  if (root_ == kNoNode) throw std::invalid_argument("LabeledTree: no root");
  // n - 1 parent edges plus full reachability from the root rules out cycles.
  std::vector<NodeId> stack{root_};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    ++reached;
    for (NodeId c : children_[v]) stack.push_back(c);
  }
  if (reached != n) throw std::invalid_argument("LabeledTree: parent links contain a cycle");
}

bool LabeledTree::has_binary_labels() const noexcept {
  for (Cost x : labels_) {
    if (x != 0 && x != 1) return false;
  }
  return true;
}

LabeledTree LabeledTree::rerooted(NodeId new_root) const {
  if (new_root >= size()) throw std::out_of_range("rerooted: no such node");
  std::vector<NodeId> parents(size(), kNoNode);
  std::vector<bool> seen(size(), false);
  std::vector<NodeId> stack{new_root};
  seen[new_root] = true;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    auto visit = [&](NodeId w) {
      if (w == kNoNode || seen[w]) return;
      seen[w] = true;
      parents[w] = v;
      stack.push_back(w);
    };
    visit(parents_[v]);
    for (NodeId c : children_[v]) visit(c);
  }
  return LabeledTree(std::move(parents), labels_);
}

BinarizedTree binarize(const LabeledTree& tree) {
  BinarizedTree out;
  out.nodes.resize(tree.size());
  for (NodeId v = 0; v < tree.size(); ++v) {
    out.nodes[v].label = tree.label(v);
    out.nodes[v].original = v;
  }
  for (NodeId v = 0; v < tree.size(); ++v) {
    const auto kids = tree.children(v);
    // Node v takes kids[0]; while more than two remain, a dummy takes the
    // rest of the list.
    NodeId attach = v;
    std::size_t k = 0;
    while (k < kids.size()) {
      const std::size_t remaining = kids.size() - k;
      auto& node = out.nodes[attach];
      node.children[0] = kids[k];
      out.nodes[kids[k]].parent = attach;
      ++k;
      if (remaining == 1) break;
      if (remaining == 2) {
        node.children[1] = kids[k];
        out.nodes[kids[k]].parent = attach;
        ++k;
        break;
      }
      const NodeId dummy = out.nodes.size();
      out.nodes.push_back(BinarizedTree::Node{});
      out.nodes[attach].children[1] = dummy;  // `node` may dangle after push_back
      out.nodes[dummy].parent = attach;
      attach = dummy;
    }
  }
  out.root = tree.root();

  // Iterative post-order plus subtree real sizes.
  std::vector<std::pair<NodeId, bool>> stack{{out.root, false}};
  out.postorder.reserve(out.nodes.size());
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    auto& node = out.nodes[v];
    if (expanded) {
      node.real_size = node.size_weight();
      for (NodeId c : node.children) {
        if (c != kNoNode) node.real_size += out.nodes[c].real_size;
      }
      out.postorder.push_back(v);
      continue;
    }
    stack.emplace_back(v, true);
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      if (*it != kNoNode) stack.emplace_back(*it, false);
    }
  }
  return out;
}

}  // namespace jpm
