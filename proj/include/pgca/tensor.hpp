#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgca/omega.hpp"
#include "pgca/restricted.hpp"

namespace pgca {

/// sum X^a Y^b (x) v_ab, keyed by (exponent, restricted-module word). Using
/// the monomial basis on the polynomial side keeps the polynomial parts
/// linearly independent.
using TensorKey = std::pair<Exponent, Word>;
using TensorVector = Combination<TensorKey>;

TensorVector tensor(const BivariatePolynomial& p, const RVector& v);
/// The restricted vector paired with each monomial.
std::map<Exponent, RVector> tensor_components(const TensorVector& t);
/// Largest Y exponent; -1 for zero.
int tensor_y_degree(const TensorVector& t);
int tensor_x_degree(const TensorVector& t);
/// Largest total polynomial degree; -1 for zero.
int tensor_degree(const TensorVector& t);
/// Largest annihilation bound of the restricted components.
std::int64_t tensor_bound(const RestrictedModule& r, const TensorVector& t);
std::string to_string(const TensorVector& t);

/// g (p (x) v) = g.p (x) v + p (x) g.v
TensorVector tensor_act(const OmegaSpec& spec, const RestrictedModule& r, const Generator& g, const TensorVector& t);
TensorVector tensor_act(const OmegaSpec& spec, const RestrictedModule& r, const AlgebraElement& x,
                        const TensorVector& t);

struct VandermondeResult {
  std::vector<std::int64_t> ms;          // the H_m indices used
  std::vector<TensorVector> components;  // v_0 .. v_q
};

/// Writes lambda^{-m} H_m t = sum_j m^j v_j for q+1 indices m past the
/// annihilation bound and solves for the v_j. A further index checks the
/// fit. Throws DegenerateSystem unless q is the Y-degree of t.
VandermondeResult vandermonde_extract(const OmegaSpec& spec, const RestrictedModule& r, const TensorVector& t, int q);

/// lambda^{-m} H_m t, for reassembly checks.
TensorVector scaled_h_action(const OmegaSpec& spec, const RestrictedModule& r, std::int64_t m, const TensorVector& t);

struct TensorProbeBounds {
  /// Target monomials X^i Y^j (x) w with i + j <= regen_degree.
  int regen_degree = 3;
};

struct TensorProbeReport {
  bool reached_one_tensor = false;
  RVector one_tensor;  // w' with 1 (x) w' reached
  std::optional<std::string> obstruction;
  int regen_degree = 0;
  std::size_t regenerated = 0;  // target monomials found in the span
  std::size_t targets = 0;
  bool all_regenerated() const { return reached_one_tensor && regenerated == targets; }
  std::vector<std::string> steps;
};

/// Replays the irreducibility argument: Y-lowering by Vandermonde
/// extraction, X-lowering by v - lambda^{-m} sigma^{-1} I_m v (J_m for the
/// (0, sigma) variant), then regeneration of X^i Y^j (x) w' from 1 (x) w'
/// with high-index H_m and L_m at several slopes m.
TensorProbeReport tensor_closure_probe(const OmegaSpec& spec, const RestrictedModule& r, const TensorVector& seed,
                                       const TensorProbeBounds& bounds);

enum class JTail { LocallyFinite, InjectiveTail };
std::string_view jtail_name(JTail t);

/// Probes J_m t for m = N+1 .. N+5 (N the tensor bound, at least 0).
/// Throws Inconclusive when some but not all probes vanish.
JTail j_nilpotency_witness(const OmegaSpec& spec, const RestrictedModule& r, const TensorVector& t);

}  // namespace pgca
