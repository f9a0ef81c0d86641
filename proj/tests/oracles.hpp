#pragma once

// Brute-force reference implementations used only by the tests. None of
// them shares code paths with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jpm/minplus.hpp"
#include "jpm/profile.hpp"
#include "jpm/tree.hpp"

namespace oracle {

using jpm::Cost;

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return bits;
}

// Random recursive tree: node v > 0 picks a parent uniformly among 0..v-1.
inline jpm::LabeledTree random_tree(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<jpm::NodeId> parents(n, jpm::kNoNode);
  std::vector<Cost> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (v > 0) parents[v] = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    labels[v] = coin(rng) ? 1 : 0;
  }
  return jpm::LabeledTree(parents, labels);
}

// Mix of shapes: random recursive, path-like, star-like, caterpillar.
inline jpm::LabeledTree random_shaped_tree(std::mt19937_64& rng, std::size_t n) {
  const int shape = std::uniform_int_distribution<int>(0, 3)(rng);
  const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution coin(density);
  std::vector<jpm::NodeId> parents(n, jpm::kNoNode);
  std::vector<Cost> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    labels[v] = coin(rng) ? 1 : 0;
    if (v == 0) continue;
    switch (shape) {
      case 0:
        parents[v] = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        break;
      case 1:  // mostly a path
        parents[v] = (rng() % 8 == 0) ? std::uniform_int_distribution<std::size_t>(0, v - 1)(rng) : v - 1;
        break;
      case 2:  // a few hubs
        parents[v] = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(v - 1, 3))(rng);
        break;
      default:  // caterpillar: spine on even ids
        parents[v] = (v % 2 == 0) ? (v >= 2 ? v - 2 : 0) : v - 1;
        break;
    }
  }
  return jpm::LabeledTree(parents, labels);
}

// For every window length i, the set of 1-counts seen (index i - 1).
inline std::vector<std::set<Cost>> string_feasible_counts(const std::vector<Cost>& values) {
  const std::size_t n = values.size();
  std::vector<std::set<Cost>> out(n);
  for (std::size_t begin = 0; begin < n; ++begin) {
    Cost sum = 0;
    for (std::size_t end = begin; end < n; ++end) {
      sum += values[end];
      out[end - begin].insert(sum);
    }
  }
  return out;
}

inline std::vector<std::set<Cost>> string_feasible_counts(const std::vector<std::uint8_t>& bits) {
  return string_feasible_counts(std::vector<Cost>(bits.begin(), bits.end()));
}

inline jpm::Profile profile_from_sets(const std::vector<std::set<Cost>>& sets) {
  std::vector<Cost> lo;
  std::vector<Cost> hi;
  for (const auto& s : sets) {
    lo.push_back(s.empty() ? jpm::kInf : *s.begin());
    hi.push_back(s.empty() ? jpm::kNegInf : *s.rbegin());
  }
  return jpm::Profile(lo, hi);
}

inline jpm::Profile brute_string_profile(const std::vector<std::uint8_t>& bits) {
  return profile_from_sets(string_feasible_counts(bits));
}

inline std::vector<Cost> brute_weighted_max(const std::vector<Cost>& weights) {
  std::vector<Cost> out;
  for (const auto& s : string_feasible_counts(weights)) out.push_back(*s.rbegin());
  return out;
}

// All 2^n node subsets, kept when a flood fill inside the subset reaches
// every member. Only for small n.
inline std::vector<std::set<Cost>> tree_feasible_sums(const jpm::LabeledTree& tree) {
  const std::size_t n = tree.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (tree.parent(v) != jpm::kNoNode) {
      adj[v].push_back(tree.parent(v));
      adj[tree.parent(v)].push_back(v);
    }
  }
  std::vector<std::set<Cost>> out(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t start = 0;
    while (!((mask >> start) & 1)) ++start;
    std::uint64_t seen = std::uint64_t{1} << start;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v]) {
        const std::uint64_t bit = std::uint64_t{1} << w;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(w);
        }
      }
    }
    if (seen != mask) continue;
    std::size_t size = 0;
    Cost sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1) {
        ++size;
        sum += tree.label(v);
      }
    }
    out[size - 1].insert(sum);
  }
  return out;
}

// C_l[i][j] straight from its definition: every split |q| + |p| = l with q
// a suffix of block i and p a prefix of block j, both non-empty when l > b.
inline Cost brute_cross_entry(const std::string& text, std::size_t b, std::size_t l, std::size_t i,
                              std::size_t j, bool minimum) {
  const std::size_t n = text.size();
  const std::size_t m = (n + b - 1) / b;
  Cost best = minimum ? jpm::kInf : jpm::kNegInf;
  if (i >= j || j >= m) return best;
  auto block = [&](std::size_t k) { return text.substr(k * b, std::min(b, n - k * b)); };
  const std::string left = block(i);
  const std::string right = block(j);
  for (std::size_t q = 0; q <= l; ++q) {
    const std::size_t p = l - q;
    if (q > left.size() || p > right.size()) continue;
    if (l > b && (q == 0 || p == 0)) continue;
    std::string window = left.substr(left.size() - q);
    for (std::size_t k = i + 1; k < j; ++k) window += block(k);
    window += right.substr(0, p);
    const Cost ones = static_cast<Cost>(std::count(window.begin(), window.end(), '1'));
    best = minimum ? std::min(best, ones) : std::max(best, ones);
  }
  return best;
}

inline jpm::CostVector brute_convolution(const jpm::CostVector& u, const jpm::CostVector& v, bool minimum) {
  jpm::CostVector w(u.size() + v.size() - 1, minimum ? jpm::kInf : jpm::kNegInf);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      if (k >= u.size() || i - k >= v.size()) continue;
      const Cost a = u[k];
      const Cost b = v[i - k];
      const bool dead = minimum ? (a >= jpm::kInf || b >= jpm::kInf) : (a <= jpm::kNegInf || b <= jpm::kNegInf);
      if (dead) continue;
      w[i] = minimum ? std::min(w[i], a + b) : std::max(w[i], a + b);
    }
  }
  return w;
}

}  // namespace oracle
