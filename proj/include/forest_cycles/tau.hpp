#pragma once

// The multiple-logarithm tree sum: all trivalent planted plane trees whose
// leaves carry x_1..x_m from left to right and whose root carries the unit.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest_cycles/forest.hpp"

namespace forest_cycles {

struct TauSpec {
  std::vector<Deco> decorations;

  explicit TauSpec(std::vector<Deco> decos) : decorations(std::move(decos)) {
    if (decorations.size() < 2) throw std::invalid_argument("tau needs at least two decorations");
    for (const auto& x : decorations)
      if (x.is_unit()) throw std::invalid_argument("tau decoration equals the unit: " + x.id);
    if (!all_distinct(decorations)) throw std::invalid_argument("tau decorations must be pairwise distinct");
  }

  /// x1..xm
  static TauSpec standard(std::size_t m) {
    std::vector<Deco> decos;
    for (std::size_t i = 1; i <= m; ++i) decos.push_back(deco("x" + std::to_string(i)));
    return TauSpec(std::move(decos));
  }

  std::size_t m() const { return decorations.size(); }
};

namespace detail {

// Full binary trees over leaves [lo, hi).
inline std::vector<TreeNode> binary_shapes(const std::vector<Deco>& leaves, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {TreeNode::leaf(leaves[lo])};
  std::vector<TreeNode> out;
  for (std::size_t split = lo + 1; split < hi; ++split) {
    auto left = binary_shapes(leaves, lo, split);
    auto right = binary_shapes(leaves, split, hi);
    for (const auto& l : left)
      for (const auto& r : right) out.push_back(TreeNode::internal({l, r}));
  }
  return out;
}

}  // namespace detail

/// The trees of tau in enumeration order (left subtree size ascending).
inline std::vector<Tree> tau_trees(const TauSpec& spec) {
  std::vector<Tree> out;
  for (auto& shape : detail::binary_shapes(spec.decorations, 0, spec.m()))
    out.emplace_back(Deco::unit(), std::move(shape));
  return out;
}

inline ForestSum tau(const TauSpec& spec) {
  ForestSum out;
  for (const auto& t : tau_trees(spec)) out += tree_sum(t);
  return out;
}

inline std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

struct InternalEdgeContribution {
  std::size_t tree;  // index into tau_trees()
  std::size_t edge;  // canonical edge index inside that tree
  Forest result;
  Rational coeff;
};

struct CancellationReport {
  bool cancels = false;
  ForestSum internal_part;  // restriction of d(tau) to internal-edge contractions
  std::vector<InternalEdgeContribution> contributions;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into contributions
};

/// Restricts d(tau) to contractions of internal edges and checks that the
/// contributions cancel in pairs.
inline CancellationReport check_internal_cancellation(const TauSpec& spec) {
  CancellationReport rep;
  auto trees = tau_trees(spec);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    // tau terms carry the canonical orientation with coefficient +1.
    for (const auto& e : canonical_edge_order(trees[i])) {
      if (e.kind != EdgeKind::Internal) continue;
      auto c = contract_in_forest(Forest{{trees[i]}}, e.index);
      if (!c) continue;
      rep.contributions.push_back({i, e.index, c->forest, Rational(c->sign)});
      rep.internal_part.add(c->forest, Rational(c->sign));
    }
  }
  std::vector<bool> used(rep.contributions.size(), false);
  for (std::size_t a = 0; a < rep.contributions.size(); ++a) {
    if (used[a]) continue;
    for (std::size_t b = a + 1; b < rep.contributions.size(); ++b) {
      if (used[b]) continue;
      const auto& ca = rep.contributions[a];
      const auto& cb = rep.contributions[b];
      if (ca.result == cb.result && ca.coeff + cb.coeff == 0) {
        used[a] = used[b] = true;
        rep.pairs.emplace_back(a, b);
        break;
      }
    }
  }
  rep.cancels = rep.internal_part.is_zero() && 2 * rep.pairs.size() == rep.contributions.size();
  return rep;
}

struct DecomposabilityReport {
  bool all_two_trees = false;
  ForestSum d_tau;
  std::map<std::size_t, std::size_t> terms_by_tree_count;
};

inline DecomposabilityReport check_decomposable(const TauSpec& spec) {
  DecomposabilityReport rep;
  rep.d_tau = d(tau(spec));
  for (const auto& [f, c] : rep.d_tau) ++rep.terms_by_tree_count[f.trees.size()];
  rep.all_two_trees = rep.terms_by_tree_count.size() == 1 && rep.terms_by_tree_count.count(2) == 1;
  return rep;
}

}  // namespace forest_cycles
