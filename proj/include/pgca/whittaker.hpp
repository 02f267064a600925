#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "pgca/enveloping.hpp"

namespace pgca {

/// A vector of the induced module, written on the PBW basis of the free
/// generators applied to the cyclic vector w. The empty word is w itself.
using InducedVector = EnvelopingElement;

/// A Whittaker function psi on the subalgebra G^(m,n) spanned by
/// L_{m+i}, H_{m+i}, I_{n+i}, J_{n+i} (i >= 0) and the centrals.
struct WhittakerDatum {
  std::int64_t m = 1;
  std::int64_t n = 0;
  std::map<Generator, Scalar> values;  // non-central, nonzero entries only
  std::array<Scalar, 3> centrals{};    // psi(c1), psi(c2), psi(c3)

  bool in_subalgebra(const Generator& g) const;
  /// Generators that survive in the PBW basis of the induced module.
  bool is_free(const Generator& g) const;
  /// Positions forced to vanish because psi kills [G^(m,n), G^(m,n)].
  bool forced_zero(const Generator& g) const;

  /// psi(g); 0 for anything unassigned. Must not be called on free generators.
  Scalar psi(const Generator& g) const;

  /// Weight of a free generator: m - k for L_k, H_k and n - k for I_k, J_k.
  std::int64_t free_weight(const Generator& g) const;
  std::int64_t free_weight(const Word& w) const;

  friend bool operator==(const WhittakerDatum&, const WhittakerDatum&) = default;
};

/// Builds a datum, rejecting assignments outside G^(m,n) (OutOfSubalgebra)
/// and nonzero values at forced-zero positions (DerivedAlgebraViolation).
/// Central generators in `raw` set the central charges.
WhittakerDatum validate_whittaker(const std::map<Generator, Scalar>& raw, std::int64_t m, std::int64_t n);

/// The induced module W_psi. Actions are memoized per (generator, word); the
/// cache is guarded so one module may be shared between threads.
class WhittakerModule {
 public:
  explicit WhittakerModule(WhittakerDatum datum);

  const WhittakerDatum& datum() const { return datum_; }
  InducedVector cyclic() const { return unit_element(); }

  InducedVector act(const Generator& g, const InducedVector& v) const;
  InducedVector act(const AlgebraElement& x, const InducedVector& v) const;

  /// N with g.v = 0 for every L/H/I/J generator g of index > N.
  std::int64_t annihilation_bound(const Word& w) const;
  std::int64_t annihilation_bound(const InducedVector& v) const;

 private:
  InducedVector act_word(const Generator& g, const Word& w) const;

  WhittakerDatum datum_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Generator, Word>, InducedVector> cache_;
};

InducedVector whittaker_act(const WhittakerDatum& psi, const Generator& g, const InducedVector& v);

/// Free-generator PBW monomials of weight 1..weight_bound, sorted by weight
/// and then canonically.
std::vector<Word> whittaker_basis(const WhittakerDatum& psi, std::int64_t weight_bound);

/// L/H/I/J generators of G^(m,n) with index <= index_max.
std::vector<Generator> subalgebra_generators(const WhittakerDatum& psi, std::int64_t index_max);

struct SearchReport {
  std::int64_t weight_bound = 0;
  std::int64_t index_max = 0;
  std::size_t basis_size = 0;
  std::size_t equations = 0;
  std::vector<InducedVector> kernel;  // one vector per free column
  std::optional<InducedVector> witness;
  /// Every kernel vector is also annihilated by (y - psi(y)) for three
  /// indices past index_max in each family.
  bool spot_check_ok = true;

  bool found() const { return witness.has_value(); }
};

/// Exhaustive exact search for Whittaker vectors v (not involving w itself)
/// with (y - psi(y)).v = 0 for every generator y of G^(m,n), inside the span
/// of PBW monomials of weight <= weight_bound. index_max is
/// 2m + 2n + weight_bound + 2; beyond it every y kills the whole basis.
SearchReport singular_vector_search(const WhittakerDatum& psi, std::int64_t weight_bound);

/// Whether (y - psi(y)).v = 0 for all subalgebra generators with index <= index_max.
bool is_whittaker_vector(const WhittakerModule& module, const InducedVector& v, std::int64_t index_max);

}  // namespace pgca
