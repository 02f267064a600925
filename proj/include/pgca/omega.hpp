#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgca/algebra.hpp"
#include "pgca/polynomial.hpp"

namespace pgca {

/// The three rank-one U(h)-free module families on C[X, Y]:
///   SigmaZero  Omega(lambda, eta, sigma, 0): I acts through sigma, J kills.
///   ZeroSigma  Omega(lambda, eta, 0, sigma): J acts through sigma, I kills.
///   DeltaOnly  Omega(lambda, delta, 0, 0):  I and J both kill.
enum class OmegaVariant { SigmaZero, ZeroSigma, DeltaOnly };

std::string_view variant_name(OmegaVariant v);
OmegaVariant parse_variant(std::string_view text);

struct OmegaSpec {
  OmegaVariant variant = OmegaVariant::SigmaZero;
  Scalar lambda{1};
  Scalar eta{0};               // SigmaZero / ZeroSigma
  BivariatePolynomial sigma{1};  // univariate in X, nonzero; unused for DeltaOnly
  BivariatePolynomial delta{0};  // univariate in X; DeltaOnly only

  static OmegaSpec sigma_zero(Scalar lambda, Scalar eta, BivariatePolynomial sigma);
  static OmegaSpec zero_sigma(Scalar lambda, Scalar eta, BivariatePolynomial sigma);
  static OmegaSpec delta_only(Scalar lambda, BivariatePolynomial delta);

  /// Throws InvalidSpec on lambda = 0, sigma = 0, or a Y-dependent sigma/delta.
  void validate() const;
  /// True for the two sigma variants with a nonzero constant sigma.
  bool sigma_is_nonzero_constant() const;
};

/// Action of a single generator; centrals act as zero.
BivariatePolynomial omega_act(const OmegaSpec& spec, const Generator& g, const BivariatePolynomial& f);
BivariatePolynomial omega_act(const OmegaSpec& spec, const AlgebraElement& x, const BivariatePolynomial& f);

struct OmegaAxiomViolation {
  Generator a;
  Generator b;
  Exponent monomial;
  BivariatePolynomial difference;  // bracket side minus commutator side
};

struct OmegaAxiomReport {
  std::uint64_t checks = 0;
  std::vector<OmegaAxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks [a,b].f == a.(b.f) - b.(a.f) on every generator pair with
/// |index| <= index_bound and every X^i Y^j with i, j <= basis_cap.
OmegaAxiomReport verify_omega_axioms(const OmegaSpec& spec, std::int64_t index_bound, int basis_cap);

/// Bounded orbit span of a seed. `contains_one` is a certificate when true;
/// when false it is only evidence that the seed sits in a proper submodule.
struct ClosureReport {
  std::size_t dimension = 0;
  bool contains_one = false;
  std::uint64_t truncated = 0;  // images discarded for exceeding the degree cap
  std::vector<BivariatePolynomial> basis;
};

ClosureReport submodule_closure_probe(const OmegaSpec& spec, const BivariatePolynomial& seed,
                                      std::int64_t index_bound, int degree_cap);

}  // namespace pgca
