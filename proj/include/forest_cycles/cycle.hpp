#pragma once

// Cubical algebraic cycles of "monomial coordinate" type.
//
// A term is a list of cube coordinates, each either 1 - q or q for a Laurent
// monomial q in constants, algebraic parameters and (for hybrid cycles)
// ordered topological variables. The term stands for the image of the
// parameter space. Constants are treated as multiplicatively independent, so
// a face equation among constants alone has no solution.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forest_cycles/formal_sum.hpp"
#include "forest_cycles/monomial.hpp"

namespace forest_cycles {

/// Raised for inputs outside the monomial coordinate class (a face equation
/// that cannot be solved monomially, or one that would pin a topological
/// variable).
class UnsupportedClass : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a face meets another face non-properly, so the boundary is
/// not defined inside the admissible complex.
class ImproperFace : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class CoordForm : unsigned char { OneMinus, Plain };

struct Coordinate {
  CoordForm form = CoordForm::OneMinus;
  Monomial q;

  static Coordinate one_minus(Monomial m) { return Coordinate{CoordForm::OneMinus, std::move(m)}; }
  static Coordinate plain(Monomial m) { return Coordinate{CoordForm::Plain, std::move(m)}; }

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
  friend auto operator<=>(const Coordinate& a, const Coordinate& b) {
    if (auto c = a.form <=> b.form; c != 0) return c;
    return a.q <=> b.q;
  }
};

using RawCoords = std::vector<Coordinate>;

struct CycleTerm {
  RawCoords coords;
  int topo_dim = 0;  // r, the number of topological variables s_1..s_r

  std::size_t size() const { return coords.size(); }

  friend bool operator==(const CycleTerm&, const CycleTerm&) = default;
  friend auto operator<=>(const CycleTerm& a, const CycleTerm& b) {
    if (auto c = a.topo_dim <=> b.topo_dim; c != 0) return c;
    return a.coords <=> b.coords;
  }
};

using CycleSum = FormalSum<CycleTerm>;

inline std::vector<int> parameters_of(const RawCoords& coords) {
  std::set<int> ps;
  for (const auto& c : coords)
    for (const auto& [s, e] : c.q.entries())
      if (s.is_parameter()) ps.insert(s.index);
  return {ps.begin(), ps.end()};
}

/// Number of algebraic parameters; equals the dimension of the cycle under
/// the (assumed) generic injectivity of the parametrization.
inline std::size_t dimension(const CycleTerm& t) { return parameters_of(t.coords).size(); }

inline std::size_t max_canonical_parameters() { return 8; }

struct Normalized {
  CycleTerm term;
  int sign = 1;
};

/// Canonical form under coordinate permutations (with the sign character)
/// and renaming of the algebraic parameters. nullopt means the term is zero:
/// two equal coordinates, a coordinate identically 0 (q = 1) or identically 1
/// (plain q = 1), or an odd permutation realized by a parameter renaming.
inline std::optional<Normalized> normalize(const RawCoords& raw, int topo_dim = 0) {
  for (const auto& c : raw)
    if (c.q.is_one()) return std::nullopt;

  std::vector<int> params = parameters_of(raw);
  if (params.size() > max_canonical_parameters())
    throw UnsupportedClass("too many parameters to canonicalize: " + std::to_string(params.size()));

  std::vector<int> perm(params.size());
  std::iota(perm.begin(), perm.end(), 0);

  std::optional<RawCoords> best;
  int best_sign = 1;
  bool conflict = false;
  std::vector<std::size_t> order(raw.size());
  do {
    RawCoords renamed;
    renamed.reserve(raw.size());
    for (const auto& c : raw) {
      renamed.push_back(Coordinate{c.form, c.q.rename([&](const Sym& s) {
                                     if (!s.is_parameter()) return s;
                                     auto at = std::lower_bound(params.begin(), params.end(), s.index) - params.begin();
                                     return Sym::parameter(perm[static_cast<std::size_t>(at)]);
                                   })});
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return renamed[a] < renamed[b]; });
    RawCoords sorted;
    sorted.reserve(raw.size());
    for (auto i : order) sorted.push_back(renamed[i]);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    int sign = permutation_sign(order);
    if (!best || sorted < *best) {
      best = std::move(sorted);
      best_sign = sign;
      conflict = false;
    } else if (sorted == *best && sign != best_sign) {
      conflict = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (conflict) return std::nullopt;
  return Normalized{CycleTerm{std::move(*best), topo_dim}, best_sign};
}

inline CycleSum cycle_sum(const RawCoords& raw, const Rational& coeff = 1, int topo_dim = 0) {
  CycleSum s;
  if (auto n = normalize(raw, topo_dim)) s.add(n->term, coeff * n->sign);
  return s;
}

/// The unit for concatenation: the term with no coordinates.
inline CycleSum cycle_unit() { return CycleSum(CycleTerm{}); }

enum class FaceEnd { Zero, Infinity };

struct FaceResult {
  std::vector<RawCoords> pieces;      // non-empty components of the intersection
  std::vector<std::string> improper;  // components contained in another face
};

namespace detail {

enum class CoordState { Generic, IdenticallyOne, Degenerate };

inline CoordState classify(const Coordinate& c) {
  if (!c.q.is_one()) return CoordState::Generic;
  // 1 - 1 is identically 0; plain 1 sits on the removed point.
  return c.form == CoordForm::OneMinus ? CoordState::Degenerate : CoordState::IdenticallyOne;
}

inline void push_piece(FaceResult& out, RawCoords coords, const std::string& what) {
  bool empty = false;
  bool degenerate = false;
  for (const auto& c : coords) {
    auto st = classify(c);
    empty = empty || st == CoordState::IdenticallyOne;
    degenerate = degenerate || st == CoordState::Degenerate;
  }
  if (empty) return;
  if (degenerate) {
    out.improper.push_back(what + ": a coordinate becomes identically 0");
    return;
  }
  out.pieces.push_back(std::move(coords));
}

// Sends monomial q to 0 or infinity by degenerating one algebraic parameter.
inline void degenerate_faces(const RawCoords& rest, const Monomial& q, bool to_infinity, FaceResult& out) {
  for (const auto& [s, e] : q.entries()) {
    if (s.is_topological()) {
      // s -> 0 is a boundary point of the simplex; s -> infinity never happens.
      bool reaches = to_infinity ? e < 0 : e > 0;
      if (reaches) throw UnsupportedClass("face would pin a topological variable to 0");
    }
  }
  for (const auto& [u, e] : q.entries()) {
    if (!u.is_parameter()) continue;
    // u -> 0 when u^e must tend to 0 with e > 0 or to infinity with e < 0.
    bool u_to_zero = to_infinity ? e < 0 : e > 0;
    bool empty = false;
    bool improper = false;
    RawCoords kept;
    for (const auto& c : rest) {
      int k = c.q.exponent(u);
      if (k == 0) {
        kept.push_back(c);
        continue;
      }
      bool value_to_zero = (k > 0) == u_to_zero;
      if (c.form == CoordForm::OneMinus && value_to_zero)
        empty = true;  // coordinate tends to 1
      else
        improper = true;  // coordinate tends to 0 or infinity
    }
    if (empty) continue;
    if (improper) {
      out.improper.push_back("degenerating a parameter drives another coordinate to 0 or infinity");
      continue;
    }
    push_piece(out, std::move(kept), "degeneration");
  }
}

}  // namespace detail

/// Intersection with the hyperplane z_i = 0 or z_i = infinity (i is 0-based).
inline FaceResult face(const CycleTerm& t, std::size_t i, FaceEnd end) {
  if (i >= t.coords.size()) throw std::out_of_range("face index out of range");
  const Coordinate& c = t.coords[i];
  RawCoords rest;
  for (std::size_t j = 0; j < t.coords.size(); ++j)
    if (j != i) rest.push_back(t.coords[j]);

  FaceResult out;
  if (c.form == CoordForm::Plain) {
    detail::degenerate_faces(rest, c.q, end == FaceEnd::Infinity, out);
    return out;
  }
  if (end == FaceEnd::Infinity) {
    detail::degenerate_faces(rest, c.q, true, out);
    return out;
  }

  // 1 - q = 0: solve q = 1 for a parameter entering with exponent +-1.
  const Monomial& q = c.q;
  if (!q.has_kind(SymKind::Parameter)) {
    bool has_constant = q.has_kind(SymKind::Constant);
    if (q.has_kind(SymKind::Topological) && !has_constant)
      throw UnsupportedClass("zero face would solve for a topological variable");
    return out;  // generic constants never satisfy q = 1
  }
  const Sym* pivot = nullptr;
  int pivot_exp = 0;
  for (const auto& [s, e] : q.entries()) {
    if (s.is_parameter() && (e == 1 || e == -1)) {
      pivot = &s;
      pivot_exp = e;
      break;
    }
  }
  if (pivot == nullptr) throw UnsupportedClass("zero face equation is not monomially solvable");
  // u^e * R = 1  =>  u = R^(-e)
  Monomial value = q.without(*pivot).pow(-pivot_exp);
  RawCoords sub;
  sub.reserve(rest.size());
  for (const auto& r : rest) sub.push_back(Coordinate{r.form, r.q.substitute(*pivot, value)});
  detail::push_piece(out, std::move(sub), "zero face");
  return out;
}

/// Sum over i of (-1)^(i-1) (face_0^i - face_inf^i), 1-based i.
inline CycleSum boundary(const CycleTerm& t) {
  CycleSum out;
  for (std::size_t i = 0; i < t.coords.size(); ++i) {
    int sign = i % 2 == 0 ? 1 : -1;
    for (FaceEnd end : {FaceEnd::Zero, FaceEnd::Infinity}) {
      FaceResult f = face(t, i, end);
      if (!f.improper.empty()) throw ImproperFace(f.improper.front());
      int s = end == FaceEnd::Zero ? sign : -sign;
      for (const auto& p : f.pieces) out += cycle_sum(p, Rational(s), t.topo_dim);
    }
  }
  return out;
}

inline CycleSum boundary(const CycleSum& s) {
  CycleSum out;
  for (const auto& [t, c] : s) out.add(boundary(t), c);
  return out;
}

/// Concatenates raw coordinate lists; the parameter sets must be disjoint.
inline RawCoords concat_raw(const RawCoords& a, const RawCoords& b) {
  auto pa = parameters_of(a);
  auto pb = parameters_of(b);
  std::vector<int> shared;
  std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(shared));
  if (!shared.empty()) throw std::invalid_argument("parameter collision in concatenation");
  RawCoords out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Shifts every parameter index by `offset`.
inline RawCoords shift_parameters(const RawCoords& coords, int offset) {
  RawCoords out;
  out.reserve(coords.size());
  for (const auto& c : coords)
    out.push_back(Coordinate{c.form, c.q.rename([offset](const Sym& s) {
                               return s.is_parameter() ? Sym::parameter(s.index + offset) : s;
                             })});
  return out;
}

/// Concatenation product. Stored terms have bound parameter names, so the
/// right factor is renamed apart before concatenating.
inline CycleSum concat(const CycleSum& a, const CycleSum& b) {
  CycleSum out;
  for (const auto& [ta, ca] : a) {
    if (ta.topo_dim != 0) throw std::invalid_argument("concat is defined on algebraic cycles only");
    auto pa = parameters_of(ta.coords);
    int offset = pa.empty() ? 0 : pa.back() + 1;
    for (const auto& [tb, cb] : b) {
      if (tb.topo_dim != 0) throw std::invalid_argument("concat is defined on algebraic cycles only");
      out += cycle_sum(concat_raw(ta.coords, shift_parameters(tb.coords, offset)), ca * cb);
    }
  }
  return out;
}

struct AdmissibilityReport {
  bool admissible = true;
  std::size_t faces_checked = 0;
  std::vector<std::string> violations;  // face chain and reason
};

namespace detail {

inline std::string face_label(std::size_t i, FaceEnd end) {
  return "d" + std::string(end == FaceEnd::Zero ? "0" : "inf") + "^" + std::to_string(i + 1);
}

inline void admissibility_walk(const CycleTerm& t, const std::string& chain, std::set<CycleTerm>& seen,
                               AdmissibilityReport& rep) {
  if (!seen.insert(t).second) return;
  std::size_t dim = dimension(t);
  for (std::size_t i = 0; i < t.coords.size(); ++i) {
    for (FaceEnd end : {FaceEnd::Zero, FaceEnd::Infinity}) {
      std::string here = chain.empty() ? face_label(i, end) : chain + " " + face_label(i, end);
      ++rep.faces_checked;
      FaceResult f = face(t, i, end);
      for (const auto& why : f.improper) {
        rep.admissible = false;
        rep.violations.push_back(here + ": " + why);
      }
      for (const auto& p : f.pieces) {
        auto n = normalize(p, t.topo_dim);
        if (!n) continue;
        std::size_t fdim = dimension(n->term);
        if (dim == 0 || fdim + 1 != dim) {
          rep.admissible = false;
          rep.violations.push_back(here + ": face has dimension " + std::to_string(fdim) + ", expected " +
                                   std::to_string(dim == 0 ? 0 : dim - 1));
          continue;
        }
        admissibility_walk(n->term, here, seen, rep);
      }
    }
  }
}

}  // namespace detail

/// Checks proper intersection with all faces of all codimensions: every
/// non-empty face drops the dimension by exactly one and never lands inside
/// another face. Recurses through every face chain.
inline AdmissibilityReport is_admissible(const CycleTerm& t) {
  AdmissibilityReport rep;
  std::set<CycleTerm> seen;
  detail::admissibility_walk(t, "", seen, rep);
  return rep;
}

}  // namespace forest_cycles
