#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pgca {

/// Basis families of the centrally extended planar Galilean conformal
/// algebra. The enumerator order is the canonical PBW family order: inside a
/// monomial, factors are written left to right as L, H, J, I, then centrals.
enum class Family : std::uint8_t { L = 0, H = 1, J = 2, I = 3, C1 = 4, C2 = 5, C3 = 6 };

inline bool is_central(Family f) { return f >= Family::C1; }
std::string_view family_name(Family f);

/// One basis element: L_n, H_n, I_n, J_n (indexed) or c1, c2, c3.
class Generator {
 public:
  constexpr Generator() = default;
  /// Throws for centrals given a nonzero index.
  Generator(Family family, std::int64_t index);

  static Generator L(std::int64_t n) { return {Family::L, n}; }
  static Generator H(std::int64_t n) { return {Family::H, n}; }
  static Generator I(std::int64_t n) { return {Family::I, n}; }
  static Generator J(std::int64_t n) { return {Family::J, n}; }
  static Generator c1() { return {Family::C1, 0}; }
  static Generator c2() { return {Family::C2, 0}; }
  static Generator c3() { return {Family::C3, 0}; }

  /// Parses "L[5]", "J[-3]", "c1".
  static Generator parse(std::string_view text);

  Family family() const { return family_; }
  std::int64_t index() const { return index_; }
  bool central() const { return is_central(family_); }

  std::string to_string() const;

  /// Canonical order: family rank, then index ascending.
  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    return a.index_ <=> b.index_;
  }

 private:
  Family family_ = Family::L;
  std::int64_t index_ = 0;
};

/// Grade in the Z-grading: the index, or 0 for centrals.
inline std::int64_t grade(const Generator& g) { return g.index(); }

/// All L/H/I/J generators with |index| <= bound followed by c1, c2, c3, in
/// canonical order.
std::vector<Generator> generators_up_to(std::int64_t bound, bool include_centrals = true);

}  // namespace pgca
