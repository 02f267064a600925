#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "pgca/whittaker.hpp"

namespace pgca {

/// Vectors of a restricted module, as formal combinations of words. Each
/// implementation fixes what the words mean.
using RVector = EnvelopingElement;

/// A module in which every vector is killed by all L/H/I/J generators of
/// sufficiently large index. Implementations must be safe for concurrent
/// read-only use.
class RestrictedModule {
 public:
  virtual ~RestrictedModule() = default;

  virtual std::string name() const = 0;
  virtual RVector act(const Generator& g, const RVector& v) const = 0;
  /// N with g.v = 0 for every L/H/I/J generator g of index > N.
  virtual std::int64_t annihilation_bound(const RVector& v) const = 0;
  virtual RVector cyclic() const = 0;

  RVector act(const AlgebraElement& x, const RVector& v) const;
};

using RestrictedHandle = std::shared_ptr<const RestrictedModule>;

/// Stand-in for "no generator acts nontrivially".
inline constexpr std::int64_t kTrivialBound = -1;

/// The one-dimensional module on which everything, centrals included, acts as 0.
RestrictedHandle trivial_module();

RestrictedHandle whittaker_handle(const WhittakerDatum& psi);

enum class LiftStyle {
  VirasoroStyle,            // H, I, J, c2, c3 act as 0
  HeisenbergVirasoroStyle,  // I, J act as 0
  Trivial,                  // everything acts as 0
};

std::string_view lift_style_name(LiftStyle s);
LiftStyle parse_lift_style(std::string_view text);

/// Wraps `base`, forcing the dropped families to act as 0. The base must
/// keep the span of its cyclic vector under the retained generators
/// invariant (e.g. a Whittaker module restricted to words in the retained
/// families). `base` may be null for LiftStyle::Trivial.
RestrictedHandle lift_restricted(LiftStyle style, RestrictedHandle base);

/// Whether g.v == 0 for every L/H/I/J generator with index in
/// (N, N + probes], N being the module's claimed bound for v.
bool bound_is_sound(const RestrictedModule& r, const RVector& v, std::int64_t probes = 4);

}  // namespace pgca
