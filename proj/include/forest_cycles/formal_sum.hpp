#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace forest_cycles {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) { return Rational(s); }

/// Parity of the permutation that sorts `seq` (distinct values). Returns +1 or -1.
template <typename T>
int permutation_sign(std::span<const T> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[i]) sign = -sign;
  return sign;
}

template <typename T>
int permutation_sign(const std::vector<T>& seq) {
  return permutation_sign(std::span<const T>(seq));
}

/// Finitely supported map from canonical terms to exact rational
/// coefficients. Zero coefficients are never stored.
template <typename Key, typename Coeff = Rational>
class FormalSum {
 public:
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  FormalSum() = default;
  explicit FormalSum(Key k, Coeff c = Coeff(1)) { add(std::move(k), std::move(c)); }

  void add(const Key& k, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const FormalSum& other, const Coeff& scale = Coeff(1)) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  FormalSum& operator+=(const FormalSum& o) {
    add(o);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    add(o, Coeff(-1));
    return *this;
  }
  FormalSum& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= Coeff(-1); }
  friend FormalSum operator*(const Coeff& s, FormalSum a) { return a *= s; }
  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

  /// Keeps the terms satisfying `pred`.
  template <typename Pred>
  FormalSum filter(Pred pred) const {
    FormalSum out;
    for (const auto& [k, c] : terms_)
      if (pred(k)) out.terms_.emplace(k, c);
    return out;
  }

  /// Linear extension of `f : Key -> FormalSum`.
  template <typename OutSum, typename F>
  OutSum map_linear(F&& f) const {
    OutSum out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace forest_cycles
