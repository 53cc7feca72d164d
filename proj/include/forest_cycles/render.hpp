#pragma once

// Plain-text and LaTeX renderings of trees, forests and cycles.
//
// Trees print as the root decoration followed by the planted subtree, for
// instance 1(x1,(x2,x3)). Parameters print as t, u, v, w and then p4, p5, ...
// Topological variables print as s1, s2, ...

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "forest_cycles/cycle.hpp"
#include "forest_cycles/forest.hpp"

namespace forest_cycles {

enum class Style { Text, Latex };

inline std::string parameter_name(int i) {
  static const char* names[] = {"t", "u", "v", "w"};
  if (i >= 0 && i < 4) return names[i];
  return "p" + std::to_string(i);
}

/// x12 -> x_{12}; other names are emitted verbatim.
inline std::string latex_identifier(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == 0 || split == name.size()) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

inline std::string render_symbol(const Sym& s, Style style) {
  switch (s.kind) {
    case SymKind::Constant:
      return style == Style::Latex ? latex_identifier(s.name) : s.name;
    case SymKind::Parameter:
      return style == Style::Latex ? latex_identifier(parameter_name(s.index)) : parameter_name(s.index);
    case SymKind::Topological:
      return style == Style::Latex ? "s_{" + std::to_string(s.index) + "}" : "s" + std::to_string(s.index);
  }
  return {};
}

namespace detail {

inline std::string render_factors(const std::vector<std::pair<Sym, int>>& fs, Style style) {
  if (fs.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0 && style == Style::Text) out += "*";
    out += render_symbol(fs[i].first, style);
    if (fs[i].second != 1) {
      out += style == Style::Latex ? "^{" + std::to_string(fs[i].second) + "}" : "^" + std::to_string(fs[i].second);
    }
  }
  return out;
}

}  // namespace detail

inline std::string render(const Monomial& q, Style style = Style::Text) {
  std::vector<std::pair<Sym, int>> num;
  std::vector<std::pair<Sym, int>> den;
  for (const auto& [s, e] : q.entries()) (e > 0 ? num : den).emplace_back(s, e > 0 ? e : -e);
  std::string n = detail::render_factors(num, style);
  if (den.empty()) return n;
  std::string d = detail::render_factors(den, style);
  if (style == Style::Latex) return "\\frac{" + n + "}{" + d + "}";
  if (den.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

inline std::string render(const Coordinate& c, Style style = Style::Text) {
  if (c.form == CoordForm::Plain) return render(c.q, style);
  return "1-" + render(c.q, style);
}

inline std::string render(const RawCoords& coords, Style style = Style::Text) {
  std::string out = style == Style::Latex ? "\\left[" : "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += render(coords[i], style);
  }
  out += style == Style::Latex ? "\\right]" : "]";
  return out;
}

inline std::string render(const CycleTerm& t, Style style = Style::Text) {
  std::string out = render(t.coords, style);
  if (t.topo_dim > 0)
    out += style == Style::Latex ? "_{r=" + std::to_string(t.topo_dim) + "}" : " (r=" + std::to_string(t.topo_dim) + ")";
  return out;
}

namespace detail {

inline void render_node(const TreeNode& n, Style style, std::string& out) {
  if (n.is_leaf()) {
    out += style == Style::Latex ? latex_identifier(n.deco.id) : n.deco.id;
    return;
  }
  out += "(";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i > 0) out += ",";
    render_node(n.children[i], style, out);
  }
  out += ")";
}

inline std::string render_coefficient(const Rational& c, bool first, Style style) {
  bool negative = c < 0;
  Rational a = negative ? Rational(-c) : c;
  std::string sign = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (a == 1) return sign;
  if (style == Style::Latex && denominator(a) != 1)
    return sign + "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
  return sign + a.str() + " ";
}

}  // namespace detail

inline std::string render(const Tree& t, Style style = Style::Text) {
  std::string out = style == Style::Latex ? latex_identifier(t.root().id) : t.root().id;
  if (t.top().is_leaf()) {
    out += "(";
    detail::render_node(t.top(), style, out);
    out += ")";
  } else {
    detail::render_node(t.top(), style, out);
  }
  return out;
}

inline std::string render(const Forest& f, Style style = Style::Text) {
  if (f.trees.empty()) return style == Style::Latex ? "\\varnothing" : "()";
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i > 0) out += style == Style::Latex ? " \\star " : " * ";
    out += style == Style::Latex ? "\\left[" + render(f.trees[i], style) + "\\right]" : render(f.trees[i], style);
  }
  return out;
}

template <typename Key>
std::string render(const FormalSum<Key>& s, Style style = Style::Text) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : s) {
    out += detail::render_coefficient(c, first, style) + render(k, style);
    first = false;
  }
  return out;
}

/// One term per line, each prefixed with its coefficient.
template <typename Key>
std::string render_lines(const FormalSum<Key>& s, Style style = Style::Text) {
  std::ostringstream os;
  for (const auto& [k, c] : s) os << (c < 0 ? "" : "+") << c.str() << "  " << render(k, style) << "\n";
  return os.str();
}

}  // namespace forest_cycles
