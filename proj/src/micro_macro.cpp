#include "jpm/micro_macro.hpp"

#include <algorithm>
#include <stdexcept>

namespace jpm {

namespace {

// Each node owns an open component (itself plus absorbed child components)
// until that component is closed off as a micro tree. `holes` counts nodes of
// the open component that already have a child in a closed micro tree; an
// open component handed to the parent keeps holes <= 1 so the parent can
// become its top without exceeding two boundary nodes.
struct Carver {
  const BinarizedTree& tree;
  std::size_t limit;
  MicroMacroDecomposition out;
  std::vector<std::size_t> open_size;
  std::vector<std::size_t> open_holes;
  std::vector<bool> absorbed;  // edge (parent(v), v) lies inside a micro tree
  std::vector<bool> closed;    // v is the top of a finished micro tree

  Carver(const BinarizedTree& t, std::size_t r)
      : tree(t),
        limit(r),
        open_size(t.size(), 0),
        open_holes(t.size(), 0),
        absorbed(t.size(), false),
        closed(t.size(), false) {
    out.micro_bound = r;
    out.micro_of.assign(t.size(), kNoNode);
  }

  void close(NodeId top) {
    closed[top] = true;
    MicroMacroDecomposition::MicroTree micro;
    micro.top = top;
    const std::size_t id = out.micro_trees.size();
    // Reverse pre-order is a valid children-before-parents order.
    std::vector<NodeId> stack{top};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      micro.nodes.push_back(v);
      out.micro_of[v] = id;
      for (NodeId c : tree.nodes[v].children) {
        if (c != kNoNode && absorbed[c]) stack.push_back(c);
      }
    }
    std::reverse(micro.nodes.begin(), micro.nodes.end());
    out.micro_trees.push_back(std::move(micro));
  }

  void visit(NodeId v) {
    std::size_t size = 1;
    std::size_t holes_below = 0;
    bool is_hole = false;
    std::array<NodeId, 2> kids = tree.nodes[v].children;
    // Smaller components first: a child left out for size reasons is then
    // at least as large as everything absorbed.
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      if (a == kNoNode || b == kNoNode) return b == kNoNode && a != kNoNode;
      return open_size[a] < open_size[b];
    });
    for (NodeId c : kids) {
      if (c == kNoNode) continue;
      if (closed[c]) {
        is_hole = true;
        continue;
      }
      if (size + open_size[c] <= limit && holes_below + open_holes[c] <= 1) {
        size += open_size[c];
        holes_below += open_holes[c];
        absorbed[c] = true;
      } else {
        close(c);
        is_hole = true;
      }
    }
    const std::size_t holes = holes_below + (is_hole ? 1 : 0);
    if (holes >= 2) {
      close(v);
    } else {
      open_size[v] = size;
      open_holes[v] = holes;
    }
  }

  MicroMacroDecomposition run() && {
    for (NodeId v : tree.postorder) visit(v);
    if (!closed[tree.root]) close(tree.root);
    link();
    return std::move(out);
  }

  void link() {
    for (std::size_t id = 0; id < out.micro_trees.size(); ++id) {
      auto& micro = out.micro_trees[id];
      const NodeId parent = tree.nodes[micro.top].parent;
      if (parent != kNoNode) {
        micro.macro_parent = out.micro_of[parent];
        out.micro_trees[micro.macro_parent].macro_children.push_back(id);
      }
      for (NodeId v : micro.nodes) {
        bool touches = v == micro.top && parent != kNoNode;
        for (NodeId c : tree.nodes[v].children) {
          if (c != kNoNode && out.micro_of[c] != id) touches = true;
        }
        if (touches) micro.boundary.push_back(v);
      }
    }
  }
};

}  // namespace

MicroMacroDecomposition micro_macro(const BinarizedTree& tree, std::size_t r) {
  if (r == 0) throw std::invalid_argument("micro_macro: r must be positive");
  return Carver(tree, r).run();
}

}  // namespace jpm
