#pragma once

// R-decorated planted plane forests and their differential graded algebra.
//
// A tree is stored as a decorated root vertex plus the subtree hanging off
// the root edge. Children are listed in counterclockwise (planar) order.
// Orientations are never stored explicitly: every forest carries the
// canonical edge ordering (trees in canonical order, each tree listed by its
// depth-first edge order) and signs live in the coefficients of ForestSum.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forest_cycles/formal_sum.hpp"

namespace forest_cycles {

/// Element of the decoration set R. The id "1" is the distinguished unit.
struct Deco {
  std::string id;

  static Deco unit() { return Deco{"1"}; }
  bool is_unit() const { return id == "1"; }

  friend auto operator<=>(const Deco&, const Deco&) = default;
};

inline Deco deco(std::string id) { return Deco{std::move(id)}; }

struct TreeNode {
  Deco deco;                       // leaves only
  std::vector<TreeNode> children;  // empty for leaves, >= 2 for internal vertices

  static TreeNode leaf(Deco d) { return TreeNode{std::move(d), {}}; }
  static TreeNode internal(std::vector<TreeNode> kids) { return TreeNode{Deco{}, std::move(kids)}; }

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// A planted plane tree with decorated external vertices.
class Tree {
 public:
  Tree(Deco root, TreeNode top) : root_(std::move(root)), top_(std::move(top)) {
    validate(top_);
    edges_ = 1 + count_edges(top_);
    leaves_ = count_leaves(top_);
    key_ = "R" + escaped(root_.id);
    append_key(top_, key_);
  }

  /// The single-edge tree root -> leaf.
  static Tree edge(Deco root, Deco leaf) { return Tree(std::move(root), TreeNode::leaf(std::move(leaf))); }

  const Deco& root() const { return root_; }
  const TreeNode& top() const { return top_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t leaf_count() const { return leaves_; }
  std::size_t internal_vertex_count() const { return edges_ - leaves_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const Tree& a, const Tree& b) { return a.key_ == b.key_; }
  // Degree first, then structure and decorations through the serialized key.
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
    return a.key_.compare(b.key_) <=> 0;
  }

 private:
  static void validate(const TreeNode& n) {
    if (n.is_leaf()) return;
    if (n.children.size() < 2)
      throw std::invalid_argument("internal vertex needs at least two outgoing edges");
    for (const auto& c : n.children) validate(c);
  }
  static std::size_t count_edges(const TreeNode& n) {
    std::size_t e = n.children.size();
    for (const auto& c : n.children) e += count_edges(c);
    return e;
  }
  static std::size_t count_leaves(const TreeNode& n) {
    if (n.is_leaf()) return 1;
    std::size_t l = 0;
    for (const auto& c : n.children) l += count_leaves(c);
    return l;
  }
  static std::string escaped(const std::string& s) { return std::to_string(s.size()) + ":" + s; }
  static void append_key(const TreeNode& n, std::string& out) {
    if (n.is_leaf()) {
      out += "L" + escaped(n.deco.id);
      return;
    }
    out += "(";
    for (const auto& c : n.children) append_key(c, out);
    out += ")";
  }

  Deco root_;
  TreeNode top_;
  std::size_t edges_ = 0;
  std::size_t leaves_ = 0;
  std::string key_;
};

enum class EdgeKind { Root, Internal, Leaf };

/// Vertices are numbered in depth-first order with 0 the root.
struct TreeVertex {
  bool internal = false;
  Deco deco;  // external vertices only
};

struct TreeEdge {
  std::size_t index;  // position in the canonical edge order
  EdgeKind kind;
  std::size_t near;  // endpoint closer to the root
  std::size_t far;
};

struct TreeLayout {
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
};

namespace detail {

inline void layout_walk(const TreeNode& n, std::size_t near, TreeLayout& out) {
  std::size_t here = out.vertices.size();
  out.vertices.push_back(TreeVertex{!n.is_leaf(), n.is_leaf() ? n.deco : Deco{}});
  EdgeKind kind = near == 0 ? EdgeKind::Root : (n.is_leaf() ? EdgeKind::Leaf : EdgeKind::Internal);
  out.edges.push_back(TreeEdge{out.edges.size(), kind, near, here});
  for (const auto& c : n.children) layout_walk(c, here, out);
}

}  // namespace detail

/// Depth-first listing: root edge first, then each outgoing edge followed by
/// the subtree it leads to, in planar order.
inline TreeLayout layout(const Tree& t) {
  TreeLayout out;
  out.vertices.push_back(TreeVertex{false, t.root()});
  detail::layout_walk(t.top(), 0, out);
  return out;
}

inline std::vector<TreeEdge> canonical_edge_order(const Tree& t) { return layout(t).edges; }

/// Canonically ordered multiset of trees (the orientation sign is kept
/// in the enclosing sum).
struct Forest {
  std::vector<Tree> trees;

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& t : trees) e += t.edge_count();
    return e;
  }

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest& a, const Forest& b) {
    return std::lexicographical_compare_three_way(a.trees.begin(), a.trees.end(), b.trees.begin(),
                                                  b.trees.end());
  }
};

using ForestSum = FormalSum<Forest>;

struct Grade {
  std::size_t edges = 0;
  std::size_t leaves = 0;
  friend bool operator==(const Grade&, const Grade&) = default;
};

inline Grade grade(const Forest& f) {
  Grade g;
  for (const auto& t : f.trees) {
    g.edges += t.edge_count();
    g.leaves += t.leaf_count();
  }
  return g;
}

/// Returns the common grade of all terms, or nullopt if the sum is not
/// bihomogeneous. The zero sum is reported as (0, 0).
inline std::optional<Grade> homogeneous_grade(const ForestSum& s) {
  std::optional<Grade> g;
  for (const auto& [f, c] : s) {
    Grade h = grade(f);
    if (g && !(*g == h)) return std::nullopt;
    g = h;
  }
  return g ? g : Grade{};
}

struct SignedForest {
  Forest forest;
  int sign = 1;
};

namespace detail {

// Tree whose edges carry identifiers from an ambient edge ordering.
struct IdNode {
  Deco deco;
  std::vector<std::pair<int, IdNode>> kids;
};

struct IdTree {
  Deco root;
  int root_edge = 0;
  IdNode top;
};

inline IdNode to_id_node(const TreeNode& n, int& next) {
  IdNode out{n.deco, {}};
  for (const auto& c : n.children) {
    int id = next++;
    out.kids.emplace_back(id, to_id_node(c, next));
  }
  return out;
}

inline IdTree to_id_tree(const Tree& t, int& next) {
  IdTree out;
  out.root = t.root();
  out.root_edge = next++;
  out.top = to_id_node(t.top(), next);
  return out;
}

inline TreeNode strip(const IdNode& n, std::vector<int>& ids) {
  if (n.kids.empty()) return TreeNode::leaf(n.deco);
  std::vector<TreeNode> kids;
  kids.reserve(n.kids.size());
  for (const auto& [id, c] : n.kids) {
    ids.push_back(id);
    kids.push_back(strip(c, ids));
  }
  return TreeNode::internal(std::move(kids));
}

inline std::pair<Tree, std::vector<int>> strip(const IdTree& t) {
  std::vector<int> ids{t.root_edge};
  TreeNode top = strip(t.top, ids);
  return {Tree(t.root, std::move(top)), std::move(ids)};
}

inline IdNode* find_parent(IdNode& n, int edge, std::size_t& slot) {
  for (std::size_t j = 0; j < n.kids.size(); ++j) {
    if (n.kids[j].first == edge) {
      slot = j;
      return &n;
    }
    if (IdNode* p = find_parent(n.kids[j].second, edge, slot)) return p;
  }
  return nullptr;
}

/// T/e. Returns nullopt when the contraction produces no edges at all
/// (single-edge tree), which is the zero of the bigraded algebra.
inline std::optional<std::vector<IdTree>> contract(const IdTree& t, int edge) {
  std::vector<IdTree> out;
  if (t.root_edge == edge) {
    if (t.top.kids.empty()) return std::nullopt;
    // The merged vertex carries the root decoration and every branch is planted at it.
    for (const auto& [id, c] : t.top.kids) out.push_back(IdTree{t.root, id, c});
    return out;
  }
  IdTree copy = t;
  std::size_t slot = 0;
  IdNode* v = find_parent(copy.top, edge, slot);
  if (v == nullptr) throw std::out_of_range("edge is not part of the tree");
  IdNode w = std::move(v->kids[slot].second);
  if (!w.kids.empty()) {
    // Internal edge: splice the far vertex's children in at the edge's position.
    v->kids.erase(v->kids.begin() + static_cast<std::ptrdiff_t>(slot));
    v->kids.insert(v->kids.begin() + static_cast<std::ptrdiff_t>(slot), w.kids.begin(), w.kids.end());
    out.push_back(std::move(copy));
    return out;
  }
  // Leaf edge: the merged vertex inherits the leaf decoration, then split there.
  Deco x = w.deco;
  std::vector<std::pair<int, IdNode>> others;
  for (std::size_t j = 0; j < v->kids.size(); ++j)
    if (j != slot) others.push_back(std::move(v->kids[j]));
  v->kids.clear();
  v->deco = x;
  out.push_back(std::move(copy));
  for (auto& [id, c] : others) out.push_back(IdTree{x, id, std::move(c)});
  return out;
}

/// Sorts trees carrying edge ids into canonical order. The sign is the
/// parity of the resulting edge sequence relative to ascending ids.
inline std::optional<SignedForest> canonicalize_ids(std::vector<std::pair<Tree, std::vector<int>>> parts) {
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SignedForest out;
  std::vector<int> seq;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i].first == out.forest.trees.back() && parts[i].first.edge_count() % 2 == 1)
      return std::nullopt;
    seq.insert(seq.end(), parts[i].second.begin(), parts[i].second.end());
    out.forest.trees.push_back(std::move(parts[i].first));
  }
  out.sign = permutation_sign(seq);
  return out;
}

}  // namespace detail

/// Puts an ordered list of trees (oriented by concatenating their canonical
/// edge orders) into canonical form. nullopt means the term vanishes.
inline std::optional<SignedForest> canonicalize(std::vector<Tree> trees) {
  std::vector<std::pair<Tree, std::vector<int>>> parts;
  int next = 0;
  for (auto& t : trees) {
    std::vector<int> ids(t.edge_count());
    for (auto& id : ids) id = next++;
    parts.emplace_back(std::move(t), std::move(ids));
  }
  return detail::canonicalize_ids(std::move(parts));
}

inline ForestSum forest_sum(std::vector<Tree> trees, const Rational& coeff = 1) {
  ForestSum s;
  if (auto c = canonicalize(std::move(trees))) s.add(c->forest, coeff * c->sign);
  return s;
}

inline ForestSum tree_sum(const Tree& t, const Rational& coeff = 1) { return forest_sum({t}, coeff); }

/// The unit of the algebra (the empty forest).
inline ForestSum forest_unit() { return ForestSum(Forest{}); }

inline ForestSum star(const ForestSum& a, const ForestSum& b) {
  ForestSum out;
  for (const auto& [fa, ca] : a) {
    for (const auto& [fb, cb] : b) {
      std::vector<Tree> trees = fa.trees;
      trees.insert(trees.end(), fb.trees.begin(), fb.trees.end());
      if (auto c = canonicalize(std::move(trees))) out.add(c->forest, ca * cb * c->sign);
    }
  }
  return out;
}

/// One term of the differential: contracts the edge at global position
/// `edge` of the canonical ordering of `f`, including the sign of moving that
/// edge to the front.
inline std::optional<SignedForest> contract_in_forest(const Forest& f, std::size_t edge) {
  std::vector<detail::IdTree> id_trees;
  int next = 0;
  std::size_t owner = f.trees.size();
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    int first = next;
    id_trees.push_back(detail::to_id_tree(f.trees[i], next));
    if (edge >= static_cast<std::size_t>(first) && edge < static_cast<std::size_t>(next)) owner = i;
  }
  if (owner == f.trees.size()) throw std::out_of_range("edge index out of range");

  auto pieces = detail::contract(id_trees[owner], static_cast<int>(edge));
  if (!pieces) return std::nullopt;

  std::vector<std::pair<Tree, std::vector<int>>> parts;
  for (std::size_t i = 0; i < id_trees.size(); ++i)
    if (i != owner) parts.push_back(detail::strip(id_trees[i]));
  for (const auto& p : *pieces) parts.push_back(detail::strip(p));

  auto out = detail::canonicalize_ids(std::move(parts));
  if (out && edge % 2 == 1) out->sign = -out->sign;
  return out;
}

/// T/e for a single tree, oriented by the inherited edge order with e removed.
inline std::optional<SignedForest> contract(const Tree& t, std::size_t edge) {
  if (edge >= t.edge_count()) throw std::out_of_range("edge index out of range");
  auto out = contract_in_forest(Forest{{t}}, edge);
  // Undo the front-moving sign: contract() reports the bare inherited order.
  if (out && edge % 2 == 1) out->sign = -out->sign;
  return out;
}

inline ForestSum d(const Forest& f) {
  ForestSum out;
  std::size_t n = f.edge_count();
  for (std::size_t e = 0; e < n; ++e)
    if (auto c = contract_in_forest(f, e)) out.add(c->forest, Rational(c->sign));
  return out;
}

inline ForestSum d(const ForestSum& s) {
  ForestSum out;
  for (const auto& [f, c] : s) out.add(d(f), c);
  return out;
}

inline void collect_external_decos(const TreeNode& n, std::vector<Deco>& out) {
  if (n.is_leaf()) {
    out.push_back(n.deco);
    return;
  }
  for (const auto& c : n.children) collect_external_decos(c, out);
}

inline std::vector<Deco> external_decorations(const Tree& t) {
  std::vector<Deco> out{t.root()};
  collect_external_decos(t.top(), out);
  return out;
}

inline bool all_distinct(std::vector<Deco> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline bool is_generic(const Tree& t) { return all_distinct(external_decorations(t)); }

/// Joint reading: all external decorations across the whole forest are
/// pairwise distinct.
inline bool is_generic(const Forest& f) {
  std::vector<Deco> all;
  for (const auto& t : f.trees) {
    auto e = external_decorations(t);
    all.insert(all.end(), e.begin(), e.end());
  }
  return all_distinct(std::move(all));
}

/// Membership in the subalgebra generated by generic trees: each tree is
/// generic on its own.
inline bool is_generic_trees(const Forest& f) {
  return std::all_of(f.trees.begin(), f.trees.end(), [](const Tree& t) { return is_generic(t); });
}

}  // namespace forest_cycles
