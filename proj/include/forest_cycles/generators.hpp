#pragma once

// Seeded random forests for property checks.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "forest_cycles/forest.hpp"

namespace forest_cycles {

class ForestGenerator {
 public:
  explicit ForestGenerator(unsigned seed, std::vector<std::string> decorations = {"1", "a", "b", "c", "d"})
      : rng_(seed), decos_(std::move(decorations)) {}

  Deco random_deco() {
    std::uniform_int_distribution<std::size_t> pick(0, decos_.size() - 1);
    return deco(decos_[pick(rng_)]);
  }

  /// Random planted tree with at most `max_edges` edges (max_edges >= 1).
  Tree tree(std::size_t max_edges) { return Tree(random_deco(), node(max_edges - 1)); }

  /// Random forest whose total edge count is at most `max_edges`.
  Forest forest(std::size_t max_edges) {
    std::uniform_int_distribution<std::size_t> total(1, max_edges);
    std::size_t budget = total(rng_);
    std::vector<Tree> trees;
    while (budget > 0) {
      std::uniform_int_distribution<std::size_t> take(1, budget);
      trees.push_back(tree(take(rng_)));
      budget -= trees.back().edge_count();
    }
    auto c = canonicalize(trees);
    if (!c) return Forest{{trees.front()}};
    return c->forest;
  }

  std::mt19937& rng() { return rng_; }

 private:
  // Subtree below an edge using at most `edges` further edges.
  TreeNode node(std::size_t edges) {
    if (edges < 2) return TreeNode::leaf(random_deco());
    std::uniform_int_distribution<std::size_t> coin(0, 3);
    if (coin(rng_) == 0) return TreeNode::leaf(random_deco());
    // choose k >= 2 children whose subtrees use edges - k edges in total
    std::size_t max_kids = std::min<std::size_t>(edges, 4);
    std::uniform_int_distribution<std::size_t> kids_dist(2, max_kids);
    std::size_t k = kids_dist(rng_);
    std::size_t rest = edges - k;
    std::vector<TreeNode> kids;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t share = 0;
      if (i + 1 == k) {
        share = rest;
      } else {
        std::uniform_int_distribution<std::size_t> d(0, rest);
        share = d(rng_);
      }
      if (share == 1) share = 0;
      rest -= share;
      kids.push_back(node(share));
    }
    return TreeNode::internal(std::move(kids));
  }

  std::mt19937 rng_;
  std::vector<std::string> decos_;
};

}  // namespace forest_cycles
