#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <utility>

#include "vmcat/integer.hpp"

namespace vmcat {

namespace detail {

inline bool is_zero(const Integer& c) { return sgn(c) == 0; }

template <class T>
  requires requires(const T& t) { { t.empty() } -> std::convertible_to<bool>; }
bool is_zero(const T& t) {
  return t.empty();
}

}  // namespace detail

/// A finitely supported formal linear combination sum_k c_k * k over a
/// totally ordered basis `Key`. Zero coefficients are never stored, so two
/// combinations are equal iff their term maps are equal.
///
/// `Coeff` is either `Integer` or another Combination (e.g. lambda
/// polynomials with differential-polynomial coefficients). `Tag` keeps
/// structurally identical spaces (K0(N) vs G0(N) vs Z[x]) distinct types.
template <class Key, class Coeff, class Tag>
class Combination {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  Combination() = default;
  Combination(const Key& key, const Coeff& c) { add_term(key, c); }

  void add_term(const Key& key, const Coeff& c) {
    if (detail::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero(it->second)) terms_.erase(it);
    }
  }

  void sub_term(const Key& key, const Coeff& c) {
    if (detail::is_zero(c)) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, -c);
    } else {
      it->second -= c;
      if (detail::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  bool contains(const Key& key) const { return terms_.count(key) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  Combination& operator+=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) sub_term(k, c);
    return *this;
  }
  Combination& operator*=(const Integer& s) {
    if (detail::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) { return a *= Integer(-1); }
  friend Combination operator*(Combination a, const Integer& s) { return a *= s; }
  friend Combination operator*(const Integer& s, Combination a) { return a *= s; }
  friend bool operator==(const Combination& a, const Combination& b) = default;

 private:
  map_type terms_;
};

}  // namespace vmcat
