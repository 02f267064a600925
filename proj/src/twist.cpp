#include "pgca/twist.hpp"

#include <algorithm>

#include "pgca/error.hpp"

namespace pgca {

namespace {

void require_twistable(const WhittakerDatum& psi) {
  if (psi.m < psi.n) throw Error(ErrorKind::PreconditionViolated, "twist needs m >= n");
  const std::int64_t k = psi.m + psi.n - 1;
  if (psi.psi(Generator::I(k)).is_zero() || psi.psi(Generator::J(k)).is_zero())
    throw Error(ErrorKind::PreconditionViolated, "twist needs psi(I_{m+n-1}) psi(J_{m+n-1}) != 0");
}

// alpha_p / beta_p with the convention that index -1 reads as 0.
Scalar ij_value(const WhittakerDatum& psi, Family f, std::int64_t p) {
  if (p < psi.n) return Scalar();
  return psi.psi(Generator(f, p));
}

}  // namespace

ScalarMatrix TwistMatrices::block() const {
  const std::size_t s = A.rows();
  ScalarMatrix out(2 * s, 2 * s);
  out.set_block(0, 0, A);
  out.set_block(0, s, B);
  out.set_block(s, 0, C);
  out.set_block(s, s, D);
  return out;
}

TwistMatrices twist_matrices(const WhittakerDatum& psi) {
  require_twistable(psi);
  const std::int64_t m = psi.m;
  const std::int64_t n = psi.n;
  const auto s = static_cast<std::size_t>(m - n + 1);
  TwistMatrices t{ScalarMatrix(s, s), ScalarMatrix(s, s), ScalarMatrix(s, s), ScalarMatrix(s, s)};
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = r; c < s; ++c) {
      const auto ri = static_cast<std::int64_t>(r);
      const auto ci = static_cast<std::int64_t>(c);
      const std::int64_t p = m + n - 1 + ri - ci;
      const Scalar alpha = ij_value(psi, Family::I, p);
      const Scalar beta = ij_value(psi, Family::J, p);
      const Scalar factor(m + n + 1 + ri + ci);
      t.A(r, c) = factor * alpha;
      t.B(r, c) = factor * beta;
      t.C(r, c) = -alpha;
      t.D(r, c) = beta;
    }
  return t;
}

Scalar psi_extended(const WhittakerDatum& psi, const AlgebraElement& x, std::vector<Generator>* leakage) {
  Scalar out;
  for (const auto& [g, c] : x) {
    if (!psi.in_subalgebra(g)) {
      if (leakage && std::find(leakage->begin(), leakage->end(), g) == leakage->end()) leakage->push_back(g);
      continue;
    }
    out += c * psi.psi(g);
  }
  return out;
}

TwistResult solve_twist(const WhittakerDatum& psi) {
  const TwistMatrices mats = twist_matrices(psi);
  const std::int64_t m = psi.m;
  const std::int64_t n = psi.n;
  const std::size_t s = mats.A.rows();

  ScalarVector rhs(2 * s);
  for (std::size_t r = 0; r < s; ++r) {
    const std::int64_t p = m + n + static_cast<std::int64_t>(r);
    rhs[r] = psi.psi(Generator::L(p));
    rhs[s + r] = psi.psi(Generator::H(p));
  }
  ScalarVector sol;
  try {
    sol = matrix_solve(mats.block(), rhs);
  } catch (const Error& e) {
    throw Error(ErrorKind::SingularMatrix, std::string("twist system unexpectedly singular: ") + e.what());
  }

  TwistResult result;
  result.a.assign(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(s));
  result.b.assign(sol.begin() + static_cast<std::ptrdiff_t>(s), sol.end());
  AlgebraElement x;
  for (std::size_t c = 0; c < s; ++c) {
    const std::int64_t idx = -static_cast<std::int64_t>(c) - 1;
    x.add_term(Generator::I(idx), -result.a[c]);
    x.add_term(Generator::J(idx), -result.b[c]);
  }
  result.translation = IJTranslation(x);

  WhittakerDatum twisted = psi;
  for (std::int64_t p = m; p <= 2 * m; ++p)
    for (Family f : {Family::L, Family::H}) {
      const Generator g(f, p);
      const Scalar v = psi_extended(psi, result.translation.apply(element(g)), &result.leakage);
      twisted.values.erase(g);
      if (!v.is_zero()) twisted.values.emplace(g, v);
    }
  result.twisted = std::move(twisted);
  return result;
}

ScalarMatrix psi14_matrix(const Scalar& alpha, const Scalar& beta) {
  const Scalar z;
  const Scalar one(1);
  return ScalarMatrix{
      {alpha, -beta, z, z, z},
      {one, z, Scalar(2) * alpha, z, -beta},
      {one, z, Scalar(4) * alpha, z, Scalar(2) * beta},
      {z, -one, z, Scalar(-2) * beta, alpha},
      {z, one, z, Scalar(4) * beta, Scalar(2) * alpha},
  };
}

Psi14Witness example_psi14_witness(const Scalar& alpha, const Scalar& beta) {
  if (alpha.is_zero() || beta.is_zero())
    throw Error(ErrorKind::PreconditionViolated, "the five-term witness needs psi(I4) psi(J4) != 0");
  Psi14Witness out;
  out.datum = validate_whittaker({{Generator::I(4), alpha}, {Generator::J(4), beta}}, 1, 4);
  out.matrix = psi14_matrix(alpha, beta);
  out.kernel = matrix_nullspace(out.matrix);
  if (out.kernel.empty()) return out;
  out.coefficients = out.kernel.front();

  const std::vector<Word> shape = {
      {Generator::I(2)},
      {Generator::J(2)},
      {Generator::I(3), Generator::I(3)},
      {Generator::J(3), Generator::J(3)},
      {Generator::J(3), Generator::I(3)},
  };
  for (std::size_t k = 0; k < shape.size(); ++k) out.witness.add_term(shape[k], out.coefficients[k]);

  WhittakerModule module(out.datum);
  out.verified = !out.witness.is_zero() &&
                 is_whittaker_vector(module, out.witness, module.annihilation_bound(out.witness) + 5);
  return out;
}

}  // namespace pgca
