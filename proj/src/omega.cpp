#include "pgca/omega.hpp"

#include <deque>

#include "pgca/error.hpp"

namespace pgca {

std::string_view variant_name(OmegaVariant v) {
  switch (v) {
    case OmegaVariant::SigmaZero: return "sigma_zero";
    case OmegaVariant::ZeroSigma: return "zero_sigma";
    case OmegaVariant::DeltaOnly: return "delta_only";
  }
  return "?";
}

OmegaVariant parse_variant(std::string_view text) {
  if (text == "sigma_zero") return OmegaVariant::SigmaZero;
  if (text == "zero_sigma") return OmegaVariant::ZeroSigma;
  if (text == "delta_only") return OmegaVariant::DeltaOnly;
  throw Error(ErrorKind::InvalidSpec, "unknown omega variant '" + std::string(text) + "'");
}

OmegaSpec OmegaSpec::sigma_zero(Scalar lambda, Scalar eta, BivariatePolynomial sigma) {
  OmegaSpec s{OmegaVariant::SigmaZero, std::move(lambda), std::move(eta), std::move(sigma), {}};
  s.validate();
  return s;
}

OmegaSpec OmegaSpec::zero_sigma(Scalar lambda, Scalar eta, BivariatePolynomial sigma) {
  OmegaSpec s{OmegaVariant::ZeroSigma, std::move(lambda), std::move(eta), std::move(sigma), {}};
  s.validate();
  return s;
}

OmegaSpec OmegaSpec::delta_only(Scalar lambda, BivariatePolynomial delta) {
  OmegaSpec s{OmegaVariant::DeltaOnly, std::move(lambda), Scalar(0), BivariatePolynomial(0), std::move(delta)};
  s.validate();
  return s;
}

void OmegaSpec::validate() const {
  if (lambda.is_zero()) throw Error(ErrorKind::InvalidSpec, "lambda must be nonzero");
  if (variant == OmegaVariant::DeltaOnly) {
    if (!delta.is_univariate_x()) throw Error(ErrorKind::InvalidSpec, "delta must be a polynomial in X");
    return;
  }
  if (sigma.is_zero()) throw Error(ErrorKind::InvalidSpec, "sigma must be nonzero");
  if (!sigma.is_univariate_x()) throw Error(ErrorKind::InvalidSpec, "sigma must be a polynomial in X");
}

bool OmegaSpec::sigma_is_nonzero_constant() const {
  return variant != OmegaVariant::DeltaOnly && !sigma.is_zero() && sigma.is_constant();
}

BivariatePolynomial omega_act(const OmegaSpec& spec, const Generator& g, const BivariatePolynomial& f) {
  if (g.central() || f.is_zero()) return {};
  const std::int64_t m = g.index();
  const Scalar lm = spec.lambda.pow(m);
  const Scalar sm(m);
  const auto X = BivariatePolynomial::X();
  const auto Y = BivariatePolynomial::Y();
  switch (g.family()) {
    case Family::L: {
      BivariatePolynomial factor;
      switch (spec.variant) {
        case OmegaVariant::SigmaZero: factor = Y - sm * X + BivariatePolynomial(sm * spec.eta); break;
        case OmegaVariant::ZeroSigma: factor = Y + sm * X + BivariatePolynomial(sm * spec.eta); break;
        case OmegaVariant::DeltaOnly: factor = Y + sm * spec.delta; break;
      }
      return lm * (f.shift(Scalar(0), -sm) * factor);
    }
    case Family::H: return lm * (X * f.shift(Scalar(0), -sm));
    case Family::I:
      if (spec.variant != OmegaVariant::SigmaZero) return {};
      return lm * (spec.sigma * f.shift(Scalar(-1), -sm));
    case Family::J:
      if (spec.variant != OmegaVariant::ZeroSigma) return {};
      return lm * (spec.sigma * f.shift(Scalar(1), -sm));
    default: return {};
  }
}

BivariatePolynomial omega_act(const OmegaSpec& spec, const AlgebraElement& x, const BivariatePolynomial& f) {
  BivariatePolynomial out;
  for (const auto& [g, c] : x) out += c * omega_act(spec, g, f);
  return out;
}

OmegaAxiomReport verify_omega_axioms(const OmegaSpec& spec, std::int64_t index_bound, int basis_cap) {
  spec.validate();
  OmegaAxiomReport report;
  auto gens = generators_up_to(index_bound);
  for (int i = 0; i <= basis_cap; ++i)
    for (int j = 0; j <= basis_cap; ++j) {
      const auto f = BivariatePolynomial::monomial(i, j);
      std::vector<BivariatePolynomial> single;
      single.reserve(gens.size());
      for (const auto& g : gens) single.push_back(omega_act(spec, g, f));
      for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
          ++report.checks;
          auto lhs = omega_act(spec, bracket_basis(gens[a], gens[b]), f);
          auto rhs = omega_act(spec, gens[a], single[b]) - omega_act(spec, gens[b], single[a]);
          if (lhs != rhs) report.violations.push_back({gens[a], gens[b], Exponent{i, j}, lhs - rhs});
        }
    }
  return report;
}

ClosureReport submodule_closure_probe(const OmegaSpec& spec, const BivariatePolynomial& seed,
                                      std::int64_t index_bound, int degree_cap) {
  spec.validate();
  if (seed.is_zero()) throw Error(ErrorKind::PreconditionViolated, "closure seed must be nonzero");
  ClosureReport report;
  SparseSpan<Exponent> span;
  std::deque<BivariatePolynomial> frontier;
  auto gens = generators_up_to(index_bound, false);

  if (seed.degree() > degree_cap) {
    report.truncated = 1;
    return report;
  }
  span.insert(seed.terms());
  frontier.push_back(seed);
  while (!frontier.empty()) {
    BivariatePolynomial v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      auto image = omega_act(spec, g, v);
      if (image.is_zero()) continue;
      if (image.degree() > degree_cap) {
        ++report.truncated;
        continue;
      }
      if (span.insert(image.terms())) frontier.push_back(std::move(image));
    }
  }
  report.dimension = span.dimension();
  report.contains_one = span.contains(BivariatePolynomial(1).terms());
  for (const auto& [pivot, vec] : span.basis()) report.basis.emplace_back(vec);
  return report;
}

}  // namespace pgca
