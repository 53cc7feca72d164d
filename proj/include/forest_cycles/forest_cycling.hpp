#pragma once

// The forest cycling map: forests of decorated trees to monomial cycles.
//
// Internal vertices receive fresh parameters numbered in depth-first order;
// external vertices contribute their decoration as a constant (the unit
// decoration contributes 1). Each edge from its near endpoint a to its far
// endpoint b gives the coordinate 1 - y_a / y_b.

#include <cstddef>
#include <string>
#include <vector>

#include "forest_cycles/cycle.hpp"
#include "forest_cycles/forest.hpp"

namespace forest_cycles {

inline std::optional<Sym> vertex_symbol(const TreeVertex& v, int param) {
  if (v.internal) return Sym::parameter(param);
  if (v.deco.is_unit()) return std::nullopt;
  return Sym::constant(v.deco.id);
}

/// Coordinates of one tree in canonical edge order, parameters starting at
/// `first_param`.
inline RawCoords phi_tree_raw(const Tree& t, int first_param = 0) {
  TreeLayout lay = layout(t);
  std::vector<int> param(lay.vertices.size(), -1);
  int next = first_param;
  for (std::size_t v = 0; v < lay.vertices.size(); ++v)
    if (lay.vertices[v].internal) param[v] = next++;

  RawCoords out;
  out.reserve(lay.edges.size());
  for (const auto& e : lay.edges) {
    auto a = vertex_symbol(lay.vertices[e.near], param[e.near]);
    auto b = vertex_symbol(lay.vertices[e.far], param[e.far]);
    out.push_back(Coordinate::one_minus(Monomial::ratio(a ? &*a : nullptr, b ? &*b : nullptr)));
  }
  return out;
}

/// Coordinates of a forest: the trees' coordinates concatenated with
/// disjoint parameter blocks.
inline RawCoords phi_forest_raw(const Forest& f) {
  RawCoords out;
  int next = 0;
  for (const auto& t : f.trees) {
    RawCoords part = phi_tree_raw(t, next);
    next += static_cast<int>(t.internal_vertex_count());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline CycleSum phi(const Tree& t) { return cycle_sum(phi_tree_raw(t)); }

inline CycleSum phi(const Forest& f) { return cycle_sum(phi_forest_raw(f)); }

inline CycleSum phi(const ForestSum& s) {
  CycleSum out;
  for (const auto& [f, c] : s) out.add(phi(f), c);
  return out;
}

/// Forests of `s` containing a tree whose external decorations repeat; the
/// image of such a term is computed but its admissibility is not guaranteed.
inline std::vector<Forest> non_generic_terms(const ForestSum& s) {
  std::vector<Forest> out;
  for (const auto& [f, c] : s)
    if (!is_generic_trees(f)) out.push_back(f);
  return out;
}

struct ChainMapReport {
  bool holds = false;
  bool generic = true;
  CycleSum phi_d;      // phi(d T)
  CycleSum d_phi;      // boundary(phi T)
  std::string error;   // set when a face computation left the supported class
};

inline ChainMapReport verify_chain_map(const ForestSum& s) {
  ChainMapReport rep;
  rep.generic = non_generic_terms(s).empty();
  try {
    rep.phi_d = phi(d(s));
    rep.d_phi = boundary(phi(s));
    rep.holds = rep.phi_d == rep.d_phi;
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.holds = false;
  }
  return rep;
}

inline ChainMapReport verify_chain_map(const Tree& t) { return verify_chain_map(tree_sum(t)); }

struct BigradingReport {
  bool holds = false;
  std::size_t coordinates = 0;  // should equal the edge count
  std::size_t parameters = 0;   // should equal the internal vertex count
  std::size_t codimension = 0;  // coordinates - parameters, should equal the leaf count
};

inline BigradingReport check_bigrading(const Tree& t) {
  BigradingReport rep;
  RawCoords raw = phi_tree_raw(t);
  rep.coordinates = raw.size();
  rep.parameters = parameters_of(raw).size();
  rep.codimension = rep.coordinates - rep.parameters;
  rep.holds = rep.coordinates == t.edge_count() && rep.parameters == t.internal_vertex_count() &&
              rep.codimension == t.leaf_count();
  return rep;
}

}  // namespace forest_cycles
