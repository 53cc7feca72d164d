#pragma once

// Hybrid cycles: monomial cycles that also depend on ordered topological
// variables 0 <= s_1 <= ... <= s_r <= 1. They carry the algebraic boundary
// and the simplex boundary delta; the total differential is
//
//   D = (-1)^r boundary + (-1)^(r(r+1)/2) delta
//
// with r the topological dimension of the source term. This is the single
// sign convention under which both shipped bounding chains close.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest_cycles/cycle.hpp"
#include "forest_cycles/forest_cycling.hpp"
#include "forest_cycles/tau.hpp"

namespace forest_cycles {

using HybridTerm = CycleTerm;
using HybridSum = CycleSum;

/// Every topological symbol in the term is one of s_1..s_r.
inline bool topological_indices_valid(const HybridTerm& t) {
  for (const auto& c : t.coords)
    for (const auto& [s, e] : c.q.entries())
      if (s.is_topological() && (s.index < 1 || s.index > t.topo_dim)) return false;
  return true;
}

inline HybridSum hybrid_sum(const RawCoords& raw, int topo_dim, const Rational& coeff = 1) {
  HybridTerm probe{raw, topo_dim};
  if (topo_dim < 0 || !topological_indices_valid(probe))
    throw std::invalid_argument("topological symbols must lie in s_1..s_r");
  return cycle_sum(raw, coeff, topo_dim);
}

namespace detail {

inline Sym reindex_after(const Sym& s, int removed) {
  if (s.is_topological() && s.index > removed) return Sym::topological(s.index - 1);
  return s;
}

// Restriction k of the simplex boundary: k = 0 is s_1 = 0, 0 < k < r is
// s_k = s_{k+1}, k = r is s_r = 1. nullopt means the restriction is empty.
inline std::optional<RawCoords> restrict_simplex(const HybridTerm& t, int k) {
  const int r = t.topo_dim;
  RawCoords out;
  out.reserve(t.coords.size());
  for (const auto& c : t.coords) {
    Monomial q = c.q;
    if (k == 0) {
      int e = q.exponent(Sym::topological(1));
      if (e != 0) {
        bool to_zero = e > 0;
        if (c.form == CoordForm::OneMinus && to_zero) return std::nullopt;  // coordinate becomes 1
        throw UnsupportedClass("s_1 = 0 drives a coordinate to 0 or infinity");
      }
      q = q.rename([](const Sym& s) { return reindex_after(s, 1); });
    } else if (k < r) {
      q = q.substitute(Sym::topological(k + 1), Monomial::of(Sym::topological(k)));
      q = q.rename([k](const Sym& s) { return reindex_after(s, k + 1); });
    } else {
      q = q.substitute(Sym::topological(r), Monomial{});
    }
    if (c.form == CoordForm::Plain && q.is_one()) return std::nullopt;
    out.push_back(Coordinate{c.form, std::move(q)});
  }
  return out;
}

}  // namespace detail

/// Alternating sum of the r + 1 boundary restrictions of the simplex, the
/// k-th carrying (-1)^k. Zero on purely algebraic terms.
inline HybridSum delta(const HybridTerm& t) {
  HybridSum out;
  if (t.topo_dim == 0) return out;
  for (int k = 0; k <= t.topo_dim; ++k) {
    auto raw = detail::restrict_simplex(t, k);
    if (!raw) continue;
    out += cycle_sum(*raw, Rational(k % 2 == 0 ? 1 : -1), t.topo_dim - 1);
  }
  return out;
}

inline HybridSum delta(const HybridSum& s) {
  HybridSum out;
  for (const auto& [t, c] : s) out.add(delta(t), c);
  return out;
}

inline int boundary_sign(int r) { return r % 2 == 0 ? 1 : -1; }
inline int delta_sign(int r) { return (r * (r + 1) / 2) % 2 == 0 ? 1 : -1; }

inline HybridSum D(const HybridTerm& t) {
  HybridSum out;
  out.add(boundary(t), Rational(boundary_sign(t.topo_dim)));
  out.add(delta(t), Rational(delta_sign(t.topo_dim)));
  return out;
}

inline HybridSum D(const HybridSum& s) {
  HybridSum out;
  for (const auto& [t, c] : s) out.add(D(t), c);
  return out;
}

enum class NegligibleReason { None, ConstantCoordinate, Decomposable };

/// Number of blocks when coordinates are grouped by shared variables: two
/// coordinates are linked when they share an algebraic parameter, and all
/// coordinates involving topological variables form one linked group.
inline std::size_t variable_blocks(const HybridTerm& t) {
  const std::size_t n = t.coords.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto linked = [&](const Monomial& a, const Monomial& b) {
    if (a.has_kind(SymKind::Topological) && b.has_kind(SymKind::Topological)) return true;
    for (const auto& [s, e] : a.entries())
      if (s.is_parameter() && b.contains(s)) return true;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (linked(t.coords[i].q, t.coords[j].q)) parent[find(i)] = find(j);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
  return roots.size();
}

/// A term is negligible for the volume-form integral when one coordinate is
/// constant, or when a hybrid term splits into two or more blocks with
/// disjoint variables.
inline NegligibleReason negligible_reason(const HybridTerm& t) {
  for (const auto& c : t.coords)
    if (c.q.is_constant()) return NegligibleReason::ConstantCoordinate;
  if (t.topo_dim > 0 && variable_blocks(t) >= 2) return NegligibleReason::Decomposable;
  return NegligibleReason::None;
}

inline bool is_negligible(const HybridTerm& t) { return negligible_reason(t) != NegligibleReason::None; }

struct BoundingReport {
  bool passes = false;
  HybridSum d_chain;                // D(chain)
  HybridSum residual;               // D(chain) - target
  HybridSum negligible_residual;
  HybridSum essential_residual;     // must be zero
  HybridSum dd_chain;               // D(D(chain)), expected zero
  std::string error;
};

inline BoundingReport verify_bounding(const HybridSum& chain, const CycleSum& target) {
  BoundingReport rep;
  try {
    rep.d_chain = D(chain);
    rep.residual = rep.d_chain - target;
    rep.negligible_residual = rep.residual.filter([](const HybridTerm& t) { return is_negligible(t); });
    rep.essential_residual = rep.residual.filter([](const HybridTerm& t) { return !is_negligible(t); });
    rep.dd_chain = D(rep.d_chain);
    rep.passes = rep.essential_residual.is_zero();
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.passes = false;
  }
  return rep;
}

/// Terms with no algebraic parameter and at least one topological variable.
inline HybridSum topological_part(const HybridSum& chain) {
  return chain.filter([](const HybridTerm& t) {
    bool has_param = false;
    bool has_topo = false;
    for (const auto& c : t.coords) {
      has_param = has_param || c.q.has_kind(SymKind::Parameter);
      has_topo = has_topo || c.q.has_kind(SymKind::Topological);
    }
    return has_topo && !has_param;
  });
}

// ---------------------------------------------------------------------------
// Shipped bounding chains.

namespace fixtures {

inline Sym x(int i) { return Sym::constant("x" + std::to_string(i)); }
inline Sym s(int i) { return Sym::topological(i); }
inline Sym p(int i) { return Sym::parameter(i); }

/// 1 - a/b, either side optionally the unit.
inline Coordinate om(std::optional<Sym> a, std::optional<Sym> b) {
  return Coordinate::one_minus(Monomial::ratio(a ? &*a : nullptr, b ? &*b : nullptr));
}

/// The two-term chain bounding the double-logarithm cycle.
inline HybridSum double_log_chain() {
  const Sym t = p(0);
  HybridSum out;
  out += hybrid_sum({om(s(1), t), om(t, x(1)), om(t, x(2))}, 1);
  out += hybrid_sum({om(s(1), x(1)), om(s(2), x(2))}, 2);
  return out;
}

inline CycleSum double_log_target() { return phi(tau(TauSpec::standard(2))); }

/// The five-term see-saw chain for the triple logarithm, each term with
/// coefficient -1. It bounds minus the triple-logarithm cycle.
inline HybridSum triple_log_chain() {
  const Sym t = p(0);
  const Sym u = p(1);
  HybridSum out;
  out += hybrid_sum({om(s(1), t), om(t, x(1)), om(t, u), om(u, x(2)), om(u, x(3))}, 1, -1);
  out += hybrid_sum({om(s(1), t), om(t, u), om(u, x(1)), om(u, x(2)), om(t, x(3))}, 1, -1);
  out += hybrid_sum({om(s(1), x(1)), om(s(2), u), om(u, x(2)), om(u, x(3))}, 2, -1);
  out += hybrid_sum({om(s(1), u), om(u, x(1)), om(u, x(2)), om(s(2), x(3))}, 2, -1);
  out += hybrid_sum({om(s(1), x(1)), om(s(2), x(2)), om(s(3), x(3))}, 3, -1);
  return out;
}

inline CycleSum triple_log_target() { return -phi(tau(TauSpec::standard(3))); }

}  // namespace fixtures

}  // namespace forest_cycles
