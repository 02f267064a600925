#include "pgca/tensor.hpp"

#include <algorithm>

#include "pgca/error.hpp"
#include "pgca/matrix.hpp"

namespace pgca {

TensorVector tensor(const BivariatePolynomial& p, const RVector& v) {
  TensorVector out;
  for (const auto& [e, a] : p.terms())
    for (const auto& [w, b] : v) out.add_term({e, w}, a * b);
  return out;
}

std::map<Exponent, RVector> tensor_components(const TensorVector& t) {
  std::map<Exponent, RVector> out;
  for (const auto& [key, c] : t) out[key.first].add_term(key.second, c);
  return out;
}

int tensor_y_degree(const TensorVector& t) {
  int d = -1;
  for (const auto& [key, c] : t) d = std::max(d, key.first.y);
  return d;
}

int tensor_x_degree(const TensorVector& t) {
  int d = -1;
  for (const auto& [key, c] : t) d = std::max(d, key.first.x);
  return d;
}

int tensor_degree(const TensorVector& t) {
  int d = -1;
  for (const auto& [key, c] : t) d = std::max(d, key.first.total());
  return d;
}

std::int64_t tensor_bound(const RestrictedModule& r, const TensorVector& t) {
  std::int64_t n = kTrivialBound;
  for (const auto& [e, v] : tensor_components(t)) n = std::max(n, r.annihilation_bound(v));
  return n;
}

std::string to_string(const TensorVector& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : tensor_components(t)) {
    if (!out.empty()) out += " + ";
    out += BivariatePolynomial::monomial(e.x, e.y).to_string() + " (x) (" + to_string(v) + ")";
  }
  return out;
}

TensorVector tensor_act(const OmegaSpec& spec, const RestrictedModule& r, const Generator& g, const TensorVector& t) {
  TensorVector out;
  for (const auto& [e, v] : tensor_components(t)) {
    const auto p = BivariatePolynomial::monomial(e.x, e.y);
    out += tensor(omega_act(spec, g, p), v);
    out += tensor(p, r.act(g, v));
  }
  return out;
}

TensorVector tensor_act(const OmegaSpec& spec, const RestrictedModule& r, const AlgebraElement& x,
                        const TensorVector& t) {
  TensorVector out;
  for (const auto& [g, c] : x) out.add_scaled(tensor_act(spec, r, g, t), c);
  return out;
}

TensorVector scaled_h_action(const OmegaSpec& spec, const RestrictedModule& r, std::int64_t m, const TensorVector& t) {
  return spec.lambda.pow(-m) * tensor_act(spec, r, Generator::H(m), t);
}

namespace {

// First index m >= 1 past the bound of t.
std::int64_t first_free_index(const RestrictedModule& r, const TensorVector& t) {
  return std::max<std::int64_t>(tensor_bound(r, t) + 1, 1);
}

}  // namespace

VandermondeResult vandermonde_extract(const OmegaSpec& spec, const RestrictedModule& r, const TensorVector& t, int q) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroVector, "nothing to extract from the zero vector");
  if (q < 0 || q != tensor_y_degree(t))
    throw Error(ErrorKind::DegenerateSystem, "declared Y-degree " + std::to_string(q) + " but the vector has " +
                                                 std::to_string(tensor_y_degree(t)));
  const std::int64_t start = first_free_index(r, t);
  const auto size = static_cast<std::size_t>(q) + 1;

  VandermondeResult out;
  std::vector<TensorVector> images;
  for (std::size_t k = 0; k < size; ++k) {
    const std::int64_t m = start + static_cast<std::int64_t>(k);
    out.ms.push_back(m);
    images.push_back(scaled_h_action(spec, r, m, t));
  }
  ScalarMatrix vander(size, size);
  for (std::size_t row = 0; row < size; ++row)
    for (std::size_t col = 0; col < size; ++col) vander(row, col) = Scalar(out.ms[row]).pow(static_cast<std::int64_t>(col));

  std::vector<TensorKey> keys;
  for (const auto& img : images)
    for (const auto& [key, c] : img) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  out.components.assign(size, TensorVector());
  for (const auto& key : keys) {
    ScalarVector rhs(size);
    for (std::size_t row = 0; row < size; ++row) rhs[row] = images[row].coeff(key);
    const ScalarVector sol = matrix_solve(vander, rhs);
    for (std::size_t j = 0; j < size; ++j) out.components[j].add_term(key, sol[j]);
  }

  const std::int64_t check = start + static_cast<std::int64_t>(size);
  TensorVector reassembled;
  for (std::size_t j = 0; j < size; ++j)
    reassembled.add_scaled(out.components[j], Scalar(check).pow(static_cast<std::int64_t>(j)));
  if (reassembled != scaled_h_action(spec, r, check, t))
    throw Error(ErrorKind::DegenerateSystem, "extracted components do not reassemble the H_m action");
  return out;
}

TensorProbeReport tensor_closure_probe(const OmegaSpec& spec, const RestrictedModule& r, const TensorVector& seed,
                                       const TensorProbeBounds& bounds) {
  spec.validate();
  if (seed.is_zero()) throw Error(ErrorKind::PreconditionViolated, "closure seed must be nonzero");
  TensorProbeReport report;
  report.regen_degree = bounds.regen_degree;
  TensorVector t = seed;

  // Y-lowering: the top Vandermonde component has no Y.
  if (const int q = tensor_y_degree(t); q > 0) {
    t = vandermonde_extract(spec, r, t, q).components.back();
    report.steps.push_back("vandermonde extraction removed Y-degree " + std::to_string(q));
  }

  // X-lowering: X^i - (X -/+ 1)^i drops the X-degree by one each round.
  while (tensor_x_degree(t) > 0) {
    if (spec.variant == OmegaVariant::DeltaOnly) {
      report.obstruction = "I and J both act as 0 on the polynomial side; X-lowering is unavailable";
      return report;
    }
    if (!spec.sigma.is_constant()) {
      report.obstruction = "sigma = " + spec.sigma.to_string() + " is not an invertible scalar; X-lowering is unavailable";
      return report;
    }
    const std::int64_t m = first_free_index(r, t);
    const Generator g = spec.variant == OmegaVariant::SigmaZero ? Generator::I(m) : Generator::J(m);
    const Scalar scale = (spec.lambda.pow(m) * spec.sigma.coeff(0, 0)).inverse();
    const int before = tensor_x_degree(t);
    t = t - scale * tensor_act(spec, r, g, t);
    report.steps.push_back("X-lowering with " + g.to_string() + " from X-degree " + std::to_string(before));
  }

  auto comps = tensor_components(t);
  if (comps.size() != 1 || comps.begin()->first != Exponent{0, 0}) {
    report.obstruction = "lowering did not end in a pure 1 (x) w vector";
    return report;
  }
  report.reached_one_tensor = true;
  report.one_tensor = comps.begin()->second;

  // Regeneration: span of 1 (x) w' under lambda^{-m} H_m and lambda^{-m} L_m
  // for enough slopes m that every Y-power separates.
  const int cap = bounds.regen_degree;
  const std::int64_t start = first_free_index(r, t);
  std::vector<Generator> moves;
  for (std::int64_t k = 0; k <= cap + 1; ++k) {
    moves.push_back(Generator::H(start + k));
    moves.push_back(Generator::L(start + k));
  }
  SparseSpan<TensorKey> span;
  std::vector<TensorVector> frontier{t};
  span.insert(t);
  while (!frontier.empty()) {
    std::vector<TensorVector> next;
    for (const auto& v : frontier)
      for (const auto& g : moves) {
        TensorVector image = spec.lambda.pow(-g.index()) * tensor_act(spec, r, g, v);
        if (image.is_zero() || tensor_degree(image) > cap) continue;
        if (span.insert(image)) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j) {
      ++report.targets;
      if (span.contains(tensor(BivariatePolynomial::monomial(i, j), report.one_tensor))) ++report.regenerated;
    }
  report.steps.push_back("regenerated " + std::to_string(report.regenerated) + " of " + std::to_string(report.targets) +
                         " monomials up to degree " + std::to_string(cap));
  return report;
}

std::string_view jtail_name(JTail t) { return t == JTail::LocallyFinite ? "locally_finite" : "injective_tail"; }

JTail j_nilpotency_witness(const OmegaSpec& spec, const RestrictedModule& r, const TensorVector& t) {
  if (t.is_zero()) return JTail::LocallyFinite;
  const std::int64_t start = std::max<std::int64_t>(tensor_bound(r, t), 0) + 1;
  int vanished = 0;
  for (std::int64_t m = start; m < start + 5; ++m)
    if (tensor_act(spec, r, Generator::J(m), t).is_zero()) ++vanished;
  if (vanished == 5) return JTail::LocallyFinite;
  if (vanished == 0) return JTail::InjectiveTail;
  throw Error(ErrorKind::Inconclusive, "J_m vanished for " + std::to_string(vanished) + " of 5 probes");
}

}  // namespace pgca
