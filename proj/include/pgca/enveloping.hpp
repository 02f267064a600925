#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pgca/algebra.hpp"

namespace pgca {

/// A word in U(G): generators multiplied left to right. A PBW monomial is a
/// word that is non-decreasing under the active generator order, so repeated
/// factors are adjacent and exponents are implicit.
using Word = std::vector<Generator>;
using EnvelopingElement = Combination<Word>;

/// Strict weak "must stand to the left of" relation used for normal ordering.
using GeneratorOrder = std::function<bool(const Generator&, const Generator&)>;

/// The canonical order: L, H, J, I, c1, c2, c3 blocks, index ascending inside
/// each block.
GeneratorOrder canonical_order();

enum class ReductionStrategy { Leftmost, Rightmost };

/// Rewrites words into PBW normal form by repeatedly replacing an adjacent
/// out-of-order pair g h with h g + [g, h].
///
/// Results are memoized per instance, so a Straightener must not be shared
/// between threads; the free function `straighten` builds a private one.
class Straightener {
 public:
  explicit Straightener(GeneratorOrder order = canonical_order(),
                        ReductionStrategy strategy = ReductionStrategy::Leftmost);

  EnvelopingElement straighten(const Word& word);
  EnvelopingElement straighten(const EnvelopingElement& u);
  EnvelopingElement multiply(const EnvelopingElement& u, const EnvelopingElement& v);

  bool is_canonical(const Word& word) const;
  const GeneratorOrder& order() const { return order_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  GeneratorOrder order_;
  ReductionStrategy strategy_;
  std::map<Word, EnvelopingElement> cache_;
};

EnvelopingElement straighten(const Word& word, ReductionStrategy strategy = ReductionStrategy::Leftmost);
EnvelopingElement multiply(const EnvelopingElement& u, const EnvelopingElement& v);

inline EnvelopingElement unit_element() { return EnvelopingElement(Word{}); }
inline EnvelopingElement monomial_element(Word w, Scalar c = Scalar(1)) { return EnvelopingElement(w, std::move(c)); }

/// "L[2]^3 H[0] I[-1]^2"; the empty monomial prints as "1".
std::string format_monomial(const Word& word);
/// Inverse of format_monomial; the result is not reordered.
Word parse_monomial(std::string_view text);
std::string to_string(const EnvelopingElement& u);

}  // namespace pgca
