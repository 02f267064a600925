#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgca/combination.hpp"
#include "pgca/generator.hpp"

namespace pgca {

using AlgebraElement = Combination<Generator>;

inline AlgebraElement element(const Generator& g, Scalar coeff = Scalar(1)) { return AlgebraElement(g, std::move(coeff)); }

/// Structure constants of the centrally extended algebra:
///   [L_m, L_n] = (n-m) L_{m+n} + (m^3-m)/12 d_{m+n,0} c1
///   [L_m, H_n] = n H_{m+n} + m^2 d_{m+n,0} c2
///   [H_m, H_n] = m d_{m+n,0} c3
///   [L_m, I_n] = (n-m) I_{m+n},  [L_m, J_n] = (n-m) J_{m+n}
///   [H_m, I_n] = I_{m+n},        [H_m, J_n] = -J_{m+n}
/// completed by antisymmetry; everything else (and anything central) is 0.
AlgebraElement bracket_basis(const Generator& a, const Generator& b);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

std::string to_string(const AlgebraElement& x);
/// Parses "L[2] - 3*I[1] + 1/2*c1" style sums.
AlgebraElement parse_element(std::string_view text);

/// The inner automorphism exp(ad_x) = 1 + ad_x for x in the abelian span of
/// the I and J generators (ad_x squares to zero there).
class IJTranslation {
 public:
  IJTranslation() = default;
  /// Throws InvalidTranslation unless x is supported on I/J generators.
  explicit IJTranslation(AlgebraElement x);

  const AlgebraElement& x() const { return x_; }
  bool is_identity() const { return x_.is_zero(); }

  AlgebraElement apply(const AlgebraElement& y) const { return y + bracket(x_, y); }

 private:
  AlgebraElement x_;
};

AlgebraElement apply_translation(const IJTranslation& t, const AlgebraElement& y);

struct JacobiViolation {
  std::array<Generator, 3> triple;
  AlgebraElement residual;
};

struct JacobiReport {
  std::int64_t index_bound = 0;
  std::uint64_t triples_checked = 0;
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive Jacobi check over unordered generator triples with
/// |index| <= index_bound (centrals included).
JacobiReport verify_jacobi(std::int64_t index_bound);

/// [a,[b,c]] + [b,[c,a]] + [c,[a,b]].
AlgebraElement jacobiator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);

/// Pairs (g1, g2) with |index| <= bound where [g1,g2] != -[g2,g1].
std::vector<std::array<Generator, 2>> antisymmetry_violations(std::int64_t bound);

/// Pairs where some non-central term of [g1,g2] has grade != grade(g1)+grade(g2).
std::vector<std::array<Generator, 2>> grading_violations(std::int64_t bound);

}  // namespace pgca
