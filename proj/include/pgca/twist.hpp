#pragma once

#include <vector>

#include "pgca/algebra.hpp"
#include "pgca/matrix.hpp"
#include "pgca/whittaker.hpp"

namespace pgca {

/// Upper-triangular (m-n+1)x(m-n+1) blocks relating the translation
/// coefficients to psi(L_p), psi(H_p) for p = m+n .. 2m. With
/// alpha_p = psi(I_p), beta_p = psi(J_p) and c >= r:
///   A[r][c] = (m+n+1+r+c) alpha_{m+n-1+r-c},  B likewise with beta,
///   C[r][c] = -alpha_{m+n-1+r-c},             D[r][c] = beta_{m+n-1+r-c}.
/// For n = 0, alpha_{-1} = beta_{-1} = 0.
struct TwistMatrices {
  ScalarMatrix A, B, C, D;

  /// [[A, B], [C, D]]
  ScalarMatrix block() const;
};

/// Throws PreconditionViolated unless m >= n and psi(I_{m+n-1}) psi(J_{m+n-1}) != 0.
TwistMatrices twist_matrices(const WhittakerDatum& psi);

struct TwistResult {
  /// a[c], b[c] multiply I_{-c-1}, J_{-c-1} with sign -1 in x.
  ScalarVector a;
  ScalarVector b;
  IJTranslation translation;
  /// psi composed with the translation; psi on I, J and centrals unchanged.
  WhittakerDatum twisted;
  /// Generators outside G^(m,n) that xi_x(L_p), xi_x(H_p) touched for some
  /// m <= p <= 2m; psi is extended by zero on them.
  std::vector<Generator> leakage;
};

/// psi evaluated on an algebra element, extended by zero off G^(m,n).
Scalar psi_extended(const WhittakerDatum& psi, const AlgebraElement& x, std::vector<Generator>* leakage = nullptr);

/// Finds x = sum_c (-a_c I_{-c-1} - b_c J_{-c-1}) such that psi o xi_x
/// vanishes on L_p, H_p for every p >= m+n.
TwistResult solve_twist(const WhittakerDatum& psi);

struct Psi14Witness {
  ScalarMatrix matrix;
  std::vector<ScalarVector> kernel;
  ScalarVector coefficients;  // a1..a5
  InducedVector witness;      // (a1 I2 + a2 J2 + a3 I3^2 + a4 J3^2 + a5 J3 I3) w
  WhittakerDatum datum;       // psi(I4) = alpha, psi(J4) = beta, rest 0
  bool verified = false;      // (y - psi(y)) w = 0 for all checked y
};

/// The 5x5 system for psi on G^(1,4) with psi(I4) = alpha, psi(J4) = beta.
ScalarMatrix psi14_matrix(const Scalar& alpha, const Scalar& beta);

/// Throws PreconditionViolated when alpha * beta == 0.
Psi14Witness example_psi14_witness(const Scalar& alpha, const Scalar& beta);

}  // namespace pgca
