#pragma once

// JSON encodings.
//
//   tree        {"root": "1", "node": NODE}
//   NODE        {"leaf": "x1"} | {"children": [NODE, NODE, ...]}
//   forest      {"sign": 1, "trees": [tree, ...]}
//   forest sum  [{"coeff": "p/q", "forest": forest}, ...]
//   monomial    {"x1": -1, "$p0": 1, "$s1": 1}
//               constants by name, parameters as "$p<k>", topological as "$s<k>"
//   coordinate  monomial q meaning 1 - q, or {"plain": monomial} meaning q
//   cycle term  {"coords": [coordinate, ...], "coeff": "p/q", "topo_dim": r}
//   cycle sum   [cycle term, ...]

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "forest_cycles/cycle.hpp"
#include "forest_cycles/forest.hpp"

namespace forest_cycles {

using Json = nlohmann::json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Json node_to_json(const TreeNode& n) {
  if (n.is_leaf()) return Json{{"leaf", n.deco.id}};
  Json kids = Json::array();
  for (const auto& c : n.children) kids.push_back(node_to_json(c));
  return Json{{"children", kids}};
}

inline TreeNode node_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("tree node must be an object");
  if (j.contains("leaf")) return TreeNode::leaf(deco(j.at("leaf").get<std::string>()));
  if (!j.contains("children") || !j.at("children").is_array())
    throw JsonFormatError("tree node needs \"leaf\" or \"children\"");
  std::vector<TreeNode> kids;
  for (const auto& c : j.at("children")) kids.push_back(node_from_json(c));
  return TreeNode::internal(std::move(kids));
}

inline std::string symbol_key(const Sym& s) {
  switch (s.kind) {
    case SymKind::Constant:
      return s.name;
    case SymKind::Parameter:
      return "$p" + std::to_string(s.index);
    case SymKind::Topological:
      return "$s" + std::to_string(s.index);
  }
  return {};
}

inline Sym symbol_from_key(const std::string& key) {
  if (key.empty()) throw JsonFormatError("empty symbol name");
  if (key[0] != '$') return Sym::constant(key);
  if (key.size() < 3 || (key[1] != 'p' && key[1] != 's')) throw JsonFormatError("bad symbol key " + key);
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(key.substr(2), &used);
    if (used != key.size() - 2) throw JsonFormatError("bad symbol key " + key);
  } catch (const std::logic_error&) {
    throw JsonFormatError("bad symbol key " + key);
  }
  return key[1] == 'p' ? Sym::parameter(index) : Sym::topological(index);
}

inline Rational coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw JsonFormatError("coefficient must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw JsonFormatError("bad coefficient " + j.get<std::string>());
  }
}

}  // namespace detail

inline Json to_json(const Tree& t) { return Json{{"root", t.root().id}, {"node", detail::node_to_json(t.top())}}; }

inline Tree tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("root") || !j.contains("node"))
    throw JsonFormatError("tree needs \"root\" and \"node\"");
  try {
    return Tree(deco(j.at("root").get<std::string>()), detail::node_from_json(j.at("node")));
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(e.what());
  }
}

inline Json to_json(const Forest& f) {
  Json trees = Json::array();
  for (const auto& t : f.trees) trees.push_back(to_json(t));
  return Json{{"sign", 1}, {"trees", trees}};
}

/// Reads a forest in any tree order; the result is canonical and the sign
/// combines the stated sign with the reordering sign.
inline ForestSum forest_from_json(const Json& j, const Rational& coeff = 1) {
  if (!j.is_object() || !j.contains("trees") || !j.at("trees").is_array())
    throw JsonFormatError("forest needs a \"trees\" array");
  int sign = j.value("sign", 1);
  if (sign != 1 && sign != -1) throw JsonFormatError("forest sign must be 1 or -1");
  std::vector<Tree> trees;
  for (const auto& t : j.at("trees")) trees.push_back(tree_from_json(t));
  return forest_sum(std::move(trees), coeff * sign);
}

inline Json to_json(const ForestSum& s) {
  Json out = Json::array();
  for (const auto& [f, c] : s) out.push_back(Json{{"coeff", c.str()}, {"forest", to_json(f)}});
  return out;
}

inline ForestSum forest_sum_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("forest sum must be an array");
  ForestSum out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("forest")) throw JsonFormatError("forest sum term needs \"forest\"");
    out += forest_from_json(term.at("forest"), detail::coeff_from_json(term.value("coeff", Json("1"))));
  }
  return out;
}

inline Json to_json(const Monomial& q) {
  Json out = Json::object();
  for (const auto& [s, e] : q.entries()) out[detail::symbol_key(s)] = e;
  return out;
}

inline Monomial monomial_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("monomial must be an object");
  std::vector<Monomial::Entry> es;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) throw JsonFormatError("exponent of " + k + " must be an integer");
    es.emplace_back(detail::symbol_from_key(k), v.get<int>());
  }
  return Monomial(std::move(es));
}

inline Json to_json(const Coordinate& c) {
  if (c.form == CoordForm::Plain) return Json{{"plain", to_json(c.q)}};
  return to_json(c.q);
}

inline Coordinate coordinate_from_json(const Json& j) {
  if (j.is_object() && j.size() == 1 && j.contains("plain") && j.at("plain").is_object())
    return Coordinate::plain(monomial_from_json(j.at("plain")));
  return Coordinate::one_minus(monomial_from_json(j));
}

inline Json to_json(const CycleTerm& t, const Rational& coeff = 1) {
  Json coords = Json::array();
  for (const auto& c : t.coords) coords.push_back(to_json(c));
  return Json{{"coords", coords}, {"coeff", coeff.str()}, {"topo_dim", t.topo_dim}};
}

inline Json to_json(const CycleSum& s) {
  Json out = Json::array();
  for (const auto& [t, c] : s) out.push_back(to_json(t, c));
  return out;
}

inline CycleSum cycle_term_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array())
    throw JsonFormatError("cycle term needs a \"coords\" array");
  RawCoords raw;
  for (const auto& c : j.at("coords")) raw.push_back(coordinate_from_json(c));
  int r = j.value("topo_dim", 0);
  if (r < 0) throw JsonFormatError("topo_dim must be non-negative");
  return cycle_sum(raw, detail::coeff_from_json(j.value("coeff", Json("1"))), r);
}

inline CycleSum cycle_sum_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("cycle sum must be an array");
  CycleSum out;
  for (const auto& t : j) out += cycle_term_from_json(t);
  return out;
}

}  // namespace forest_cycles
