#pragma once

#include <functional>
#include <map>
#include <utility>

#include "pgca/scalar.hpp"

namespace pgca {

/// Finite formal linear combination sum c_k * key_k with Scalar coefficients.
/// Zero coefficients are never stored, so two combinations are equal iff
/// their term maps are equal.
template <class Key, class Compare = std::less<Key>>
class Combination {
 public:
  using map_type = std::map<Key, Scalar, Compare>;
  using const_iterator = typename map_type::const_iterator;

  Combination() = default;
  explicit Combination(const Key& key, Scalar coeff = Scalar(1)) { add_term(key, std::move(coeff)); }

  void add_term(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Combination& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  /// this += s * o
  void add_scaled(const Combination& o, const Scalar& s) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : o.terms_) add_term(k, c * s);
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Combination a, const Scalar& s) { return a *= s; }
  friend Combination operator*(const Scalar& s, Combination a) { return a *= s; }
  Combination operator-() const { return Combination(*this) *= Scalar(-1); }
  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Combination& a, const Combination& b) { return !(a == b); }

 private:
  map_type terms_;
};

/// Incrementally maintained echelon basis of a subspace of sparse vectors.
/// Each stored vector's largest key is its pivot and pivots are distinct,
/// which makes membership a single reduction pass.
template <class Key, class Compare = std::less<Key>>
class SparseSpan {
 public:
  using Vector = Combination<Key, Compare>;

  /// Reduces v against the basis; the result is zero iff v is in the span.
  Vector reduce(Vector v) const {
    while (!v.is_zero()) {
      auto it = basis_.find(v.terms().rbegin()->first);
      if (it == basis_.end()) break;
      Scalar coeff = v.terms().rbegin()->second;
      v.add_scaled(it->second, -coeff);
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  /// Adds v; returns the normalized new basis vector, or nothing if v was
  /// already in the span.
  bool insert(const Vector& v, Vector* added = nullptr) {
    Vector r = reduce(v);
    if (r.is_zero()) return false;
    Key top = r.terms().rbegin()->first;
    r *= r.terms().rbegin()->second.inverse();
    if (added) *added = r;
    basis_.emplace(std::move(top), std::move(r));
    return true;
  }

  std::size_t dimension() const { return basis_.size(); }
  const std::map<Key, Vector, Compare>& basis() const { return basis_; }

 private:
  std::map<Key, Vector, Compare> basis_;
};

}  // namespace pgca
