#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forest_cycles {

enum class SymKind : unsigned char { Constant, Parameter, Topological };

/// A symbol appearing in cube coordinates. Constants are named elements of
/// F^x, parameters are the algebraic parametrizing variables, topological
/// symbols are the ordered real variables s_1 <= ... <= s_r.
struct Sym {
  SymKind kind = SymKind::Constant;
  std::string name;  // constants
  int index = 0;     // parameters (0-based) and topological variables (1-based)

  static Sym constant(std::string n) { return Sym{SymKind::Constant, std::move(n), 0}; }
  static Sym parameter(int i) { return Sym{SymKind::Parameter, {}, i}; }
  static Sym topological(int i) { return Sym{SymKind::Topological, {}, i}; }

  bool is_constant() const { return kind == SymKind::Constant; }
  bool is_parameter() const { return kind == SymKind::Parameter; }
  bool is_topological() const { return kind == SymKind::Topological; }

  friend auto operator<=>(const Sym&, const Sym&) = default;
};

/// Laurent monomial: finitely supported map Sym -> nonzero integer exponent,
/// stored sorted by symbol. The empty monomial is 1.
class Monomial {
 public:
  using Entry = std::pair<Sym, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries) {
    for (auto& [s, e] : entries) mul_in(s, e);
  }
  static Monomial of(const Sym& s, int e = 1) { return Monomial({{s, e}}); }

  /// y_num / y_den where either side may be the unit (nullptr).
  static Monomial ratio(const Sym* num, const Sym* den) {
    Monomial m;
    if (num) m.mul_in(*num, 1);
    if (den) m.mul_in(*den, -1);
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }

  int exponent(const Sym& s) const {
    auto it = find(s);
    return it == e_.end() ? 0 : it->second;
  }
  bool contains(const Sym& s) const { return find(s) != e_.end(); }

  bool has_kind(SymKind k) const {
    return std::any_of(e_.begin(), e_.end(), [k](const Entry& x) { return x.first.kind == k; });
  }
  /// No parameters of either kind.
  bool is_constant() const { return !has_kind(SymKind::Parameter) && !has_kind(SymKind::Topological); }

  Monomial& operator*=(const Monomial& o) {
    for (const auto& [s, e] : o.e_) mul_in(s, e);
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  Monomial pow(int k) const {
    Monomial out;
    if (k == 0) return out;
    out.e_ = e_;
    for (auto& [s, e] : out.e_) e *= k;
    return out;
  }
  Monomial inverse() const { return pow(-1); }

  Monomial without(const Sym& s) const {
    Monomial out = *this;
    auto it = out.find(s);
    if (it != out.e_.end()) out.e_.erase(it);
    return out;
  }

  /// Replaces s by `value`.
  Monomial substitute(const Sym& s, const Monomial& value) const {
    int e = exponent(s);
    if (e == 0) return *this;
    return without(s) * value.pow(e);
  }

  template <typename F>
  Monomial rename(F&& f) const {
    Monomial out;
    for (const auto& [s, e] : e_) out.mul_in(f(s), e);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<Entry>::const_iterator find(const Sym& s) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), s, [](const Entry& x, const Sym& k) { return x.first < k; });
    return (it != e_.end() && it->first == s) ? it : e_.end();
  }
  std::vector<Entry>::iterator find(const Sym& s) {
    auto it = std::lower_bound(e_.begin(), e_.end(), s, [](const Entry& x, const Sym& k) { return x.first < k; });
    return (it != e_.end() && it->first == s) ? it : e_.end();
  }
  void mul_in(const Sym& s, int e) {
    if (e == 0) return;
    auto it = std::lower_bound(e_.begin(), e_.end(), s, [](const Entry& x, const Sym& k) { return x.first < k; });
    if (it != e_.end() && it->first == s) {
      it->second += e;
      if (it->second == 0) e_.erase(it);
    } else {
      e_.insert(it, Entry{s, e});
    }
  }

  std::vector<Entry> e_;
};

}  // namespace forest_cycles
