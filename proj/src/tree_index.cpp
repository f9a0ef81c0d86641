#include "jpm/tree_index.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace jpm {

namespace {

const CostVector kEmptySide{0};

// Turns the convolution of the two child sides into the node's array. With
// `required` the node itself must be taken, so size 0 is infeasible for a
// real node.
NodeProfile shape_node(CostVector conv, const BinarizedTree::Node& node, Semiring s,
                       bool required) {
  if (!node.is_real()) {
    if (!required) conv[0] = 0;
    return conv;
  }
  NodeProfile out(conv.size() + 1);
  out[0] = required ? absorbing(s) : 0;
  for (std::size_t i = 0; i < conv.size(); ++i) out[i + 1] = tropical_mul(s, conv[i], node.label);
  return out;
}

void fold_into(CostVector& best, std::span<const Cost> a, Semiring s) {
  const std::size_t top = std::min(a.size() - 1, best.size());
  for (std::size_t i = 1; i <= top; ++i) best[i - 1] = better(s, best[i - 1], a[i]);
}

void merge_into(CostVector& acc, std::span<const Cost> a, Semiring s) {
  if (acc.size() < a.size()) acc.resize(a.size(), absorbing(s));
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] = better(s, acc[i], a[i]);
}

std::size_t default_micro_bound(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  return std::max<std::size_t>(r, 1);
}

void check_weight_magnitudes(const LabeledTree& tree) {
  Cost total = 0;
  for (Cost w : tree.labels()) {
    if (w > kFiniteBound || w < -kFiniteBound) throw std::invalid_argument("tree weight too large");
    total += w < 0 ? -w : w;
    if (total > kFiniteBound) throw std::invalid_argument("tree weights too large in total");
  }
}

}  // namespace

NodeProfile combine_children(std::span<const Cost> left, std::span<const Cost> right, Cost label,
                             bool counts_size, Semiring s) {
  BinarizedTree::Node node;
  node.label = label;
  node.original = counts_size ? 0 : kNoNode;
  return shape_node(tropical_convolution(left, right, s), node, s, false);
}

CostVector simple_tree_dp(const BinarizedTree& tree, Semiring s, const NodeProfileObserver& observer) {
  CostVector best(tree.real_count(), absorbing(s));
  std::vector<NodeProfile> arrays(tree.size());
  auto side = [&](NodeId c) -> std::span<const Cost> {
    return c == kNoNode ? std::span<const Cost>(kEmptySide) : std::span<const Cost>(arrays[c]);
  };
  for (NodeId v : tree.postorder) {
    const auto& node = tree.nodes[v];
    arrays[v] = shape_node(tropical_convolution(side(node.children[0]), side(node.children[1]), s),
                           node, s, false);
    // Children are never needed again.
    for (NodeId c : node.children) {
      if (c != kNoNode) NodeProfile().swap(arrays[c]);
    }
    if (observer) observer(arrays[v]);
    if (node.is_real()) fold_into(best, arrays[v], s);
  }
  return best;
}

Profile simple_tree_profile(const BinarizedTree& tree, const NodeProfileObserver& observer) {
  return Profile(simple_tree_dp(tree, Semiring::min_plus, observer),
                 simple_tree_dp(tree, Semiring::max_plus, observer));
}

NodeProfile DeltaBits::decode() const {
  NodeProfile out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i];
  return out;
}

DeltaBits encode_delta(std::span<const Cost> a) {
  if (a.empty()) throw CorruptProfileError("encode_delta: empty array");
  if (a[0] != 0) throw CorruptProfileError("encode_delta: entry 0 must be 0");
  std::vector<std::uint8_t> bits(a.size(), 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Cost step = a[i] - a[i - 1];
    if (step != 0 && step != 1) {
      throw CorruptProfileError("encode_delta: step " + std::to_string(step) + " at index " +
                                std::to_string(i));
    }
    bits[i] = static_cast<std::uint8_t>(step);
  }
  return DeltaBits(RankBitvector(bits));
}

CostVector chunked_convolution(std::span<const Cost> a, std::span<const Cost> b, Semiring s,
                               std::size_t min_width, const ProductKernel& kernel) {
  if (a.empty() || b.empty()) throw std::invalid_argument("chunked_convolution: empty operand");
  const auto shorter = a.size() <= b.size() ? a : b;
  const auto longer = a.size() <= b.size() ? b : a;
  const std::size_t width = std::max(shorter.size(), min_width);
  CostVector padded(width, absorbing(s));
  std::copy(shorter.begin(), shorter.end(), padded.begin());

  CostVector out(a.size() + b.size() - 1, absorbing(s));
  for (std::size_t offset = 0; offset < longer.size(); offset += width) {
    const auto chunk = longer.subspan(offset, std::min(width, longer.size() - offset));
    const CostVector part = tropical_convolution_auto(padded, chunk, s, kernel);
    const std::size_t limit = std::min(part.size(), out.size() - offset);
    for (std::size_t q = 0; q < limit; ++q) out[offset + q] = better(s, out[offset + q], part[q]);
  }
  return out;
}

// Micro trees are processed bottom-up. Inside micro tree C with top t, at
// most one node x != t has children in other micro trees. For every node v
// of C the DP keeps
//   local[v]    subgraphs containing v (or nothing) that avoid x,
//   required[v] subgraphs containing the whole path v..parent(x) that avoid
//               x's subtree (only for proper ancestors of x),
// and computes full[x] once from x's children. The full array of an
// ancestor v of x is then best(local[v], required[v] (*) full[x]). Only the
// top's full array leaves C, delta-encoded, for the parent micro tree.
// Subgraphs rooted at any path node and reaching x are folded in one
// convolution of the pointwise best required array with full[x].
CostVector micro_macro_dp(const BinarizedTree& tree, const MicroMacroDecomposition& decomposition,
                          Semiring s, const NodeProfileObserver& observer,
                          const ProductKernel& kernel) {
  const std::size_t r = decomposition.micro_bound;
  CostVector best(tree.real_count(), absorbing(s));
  std::vector<std::optional<DeltaBits>> top_arrays(decomposition.micro_trees.size());
  std::vector<NodeProfile> local(tree.size());
  std::vector<NodeProfile> required(tree.size());
  std::vector<char> on_path(tree.size(), 0);
  auto observe = [&](std::span<const Cost> a) {
    if (observer) observer(a);
  };

  for (std::size_t id = 0; id < decomposition.micro_trees.size(); ++id) {
    const auto& micro = decomposition.micro_trees[id];
    const NodeId top = micro.top;
    auto inside = [&](NodeId c) { return decomposition.micro_of[c] == id; };

    std::vector<std::pair<NodeId, NodeProfile>> outside;
    for (std::size_t child : micro.macro_children) {
      outside.emplace_back(decomposition.micro_trees[child].top, top_arrays[child]->decode());
      top_arrays[child].reset();
    }
    auto outside_array = [&](NodeId c) -> std::span<const Cost> {
      for (const auto& [node, array] : outside) {
        if (node == c) return array;
      }
      throw std::logic_error("micro_macro_dp: missing array of a child micro tree");
    };

    NodeId x = kNoNode;
    for (NodeId v : micro.nodes) {
      if (v == top) continue;
      for (NodeId c : tree.nodes[v].children) {
        if (c != kNoNode && !inside(c)) x = v;
      }
    }
    if (x != kNoNode) {
      for (NodeId v = tree.nodes[x].parent;; v = tree.nodes[v].parent) {
        on_path[v] = 1;
        if (v == top) break;
      }
    }

    // Child side as seen by local[]: x and its subtree are left out.
    auto local_side = [&](NodeId c) -> std::span<const Cost> {
      if (c == kNoNode || c == x) return kEmptySide;
      if (!inside(c)) return outside_array(c);
      return local[c];
    };
    auto convolve = [&](std::span<const Cost> a, std::span<const Cost> b, bool crosses) {
      return crosses ? chunked_convolution(a, b, s, r, kernel) : tropical_convolution(a, b, s);
    };

    NodeProfile full_x;
    for (NodeId v : micro.nodes) {
      const auto& node = tree.nodes[v];
      const auto [c0, c1] = node.children;
      const bool crosses = (c0 != kNoNode && !inside(c0)) || (c1 != kNoNode && !inside(c1));
      if (v == x) {
        auto side = [&](NodeId c) -> std::span<const Cost> {
          if (c == kNoNode) return kEmptySide;
          return inside(c) ? std::span<const Cost>(local[c]) : outside_array(c);
        };
        full_x = shape_node(convolve(side(c0), side(c1), crosses), node, s, false);
        observe(full_x);
        if (node.is_real()) fold_into(best, full_x, s);
      } else if (on_path[v]) {
        const NodeId path_child = (c0 != kNoNode && (c0 == x || on_path[c0])) ? c0 : c1;
        const NodeId other = path_child == c0 ? c1 : c0;
        const auto other_side = local_side(other);
        const auto path_required = path_child == x ? std::span<const Cost>(kEmptySide)
                                                   : std::span<const Cost>(required[path_child]);
        local[v] = shape_node(convolve(local_side(path_child), other_side, crosses), node, s, false);
        required[v] = shape_node(convolve(path_required, other_side, crosses), node, s, true);
        observe(local[v]);
        if (node.is_real()) fold_into(best, local[v], s);
      } else {
        local[v] = shape_node(convolve(local_side(c0), local_side(c1), crosses), node, s, false);
        observe(local[v]);
        if (node.is_real()) fold_into(best, local[v], s);
      }
    }

    NodeProfile top_array;
    if (x == kNoNode) {
      top_array = std::move(local[top]);
    } else {
      CostVector path_best;
      for (NodeId v : micro.nodes) {
        if (on_path[v] && tree.nodes[v].is_real()) merge_into(path_best, required[v], s);
      }
      if (!path_best.empty()) {
        fold_into(best, chunked_convolution(path_best, full_x, s, r, kernel), s);
      }
      top_array.assign(tree.nodes[top].real_size + 1, absorbing(s));
      merge_into(top_array, local[top], s);
      const CostVector through = chunked_convolution(required[top], full_x, s, r, kernel);
      for (std::size_t i = 0; i < top_array.size() && i < through.size(); ++i) {
        top_array[i] = better(s, top_array[i], through[i]);
      }
      top_array[0] = 0;
      observe(top_array);
    }
    if (micro.macro_parent != kNoNode) top_arrays[id] = encode_delta(top_array);

    for (NodeId v : micro.nodes) {
      NodeProfile().swap(local[v]);
      NodeProfile().swap(required[v]);
      on_path[v] = 0;
    }
  }
  return best;
}

Profile tree_profile(const BinarizedTree& tree, std::size_t r, const NodeProfileObserver& observer,
                     const ProductKernel& kernel) {
  for (const auto& node : tree.nodes) {
    if (node.label != 0 && node.label != 1) {
      throw std::invalid_argument("tree_profile: labels must be 0 or 1");
    }
  }
  const MicroMacroDecomposition decomposition = micro_macro(tree, r);
  return Profile(micro_macro_dp(tree, decomposition, Semiring::min_plus, observer, kernel),
                 micro_macro_dp(tree, decomposition, Semiring::max_plus, observer, kernel));
}

Profile tree_profile(const LabeledTree& tree, std::optional<std::size_t> r,
                     const NodeProfileObserver& observer, const ProductKernel& kernel) {
  if (!tree.has_binary_labels()) throw std::invalid_argument("tree_profile: labels must be 0 or 1");
  return tree_profile(binarize(tree), r.value_or(default_micro_bound(tree.size())), observer, kernel);
}

CostVector weighted_tree_max_sums(const LabeledTree& tree) {
  check_weight_magnitudes(tree);
  return simple_tree_dp(binarize(tree), Semiring::max_plus);
}

void for_each_connected_subset(const LabeledTree& tree, std::size_t max_n,
                               const std::function<void(std::size_t, Cost)>& visit) {
  const std::size_t n = tree.size();
  if (max_n > 63) throw std::invalid_argument("for_each_connected_subset: max_n above 63");
  if (n > max_n) {
    throw std::invalid_argument("for_each_connected_subset: " + std::to_string(n) +
                                " nodes exceed the enumeration bound " + std::to_string(max_n));
  }
  std::vector<std::uint64_t> adjacent(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (tree.parent(v) != kNoNode) {
      adjacent[v] |= std::uint64_t{1} << tree.parent(v);
      adjacent[tree.parent(v)] |= std::uint64_t{1} << v;
    }
  }
  // Each connected set is produced once: from its smallest node, and within
  // that, along the first candidate in pop order that it contains.
  auto grow = [&](auto&& self, std::uint64_t set, std::uint64_t candidates, std::uint64_t banned,
                  std::size_t size, Cost sum) -> void {
    visit(size, sum);
    while (candidates) {
      const std::uint64_t bit = candidates & (~candidates + 1);
      candidates ^= bit;
      const auto u = static_cast<NodeId>(std::countr_zero(bit));
      const std::uint64_t next = set | bit;
      self(self, next, (candidates | adjacent[u]) & ~next & ~banned, banned, size + 1,
           sum + tree.label(u));
      banned |= bit;
    }
  };
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t below = (std::uint64_t{1} << v) - 1;
    const std::uint64_t self_bit = std::uint64_t{1} << v;
    grow(grow, self_bit, adjacent[v] & ~below, below, 1, tree.label(v));
  }
}

Profile enumerate_connected_oracle(const LabeledTree& tree, std::size_t max_n) {
  Profile profile = Profile::infeasible(tree.size());
  for_each_connected_subset(tree, max_n, [&](std::size_t size, Cost sum) {
    profile.relax_min(size, sum);
    profile.relax_max(size, sum);
  });
  return profile;
}

CostVector enumerate_weighted_max_sums(const LabeledTree& tree, std::size_t max_n) {
  CostVector best(tree.size(), kNegInf);
  for_each_connected_subset(tree, max_n, [&](std::size_t size, Cost sum) {
    best[size - 1] = std::max(best[size - 1], sum);
  });
  return best;
}

}  // namespace jpm
