#include <doctest.h>

#include "pgca/error.hpp"
#include "pgca/restricted.hpp"
#include "pgca/tensor.hpp"
#include "testgen.hpp"

using namespace pgca;

namespace {

const auto X = BivariatePolynomial::X();
const auto Y = BivariatePolynomial::Y();
const BivariatePolynomial one(1);

WhittakerDatum psi11() { return validate_whittaker({{Generator::I(1), 1}, {Generator::J(1), 1}}, 1, 1); }

TensorVector random_tensor(testgen::Gen& g, const WhittakerDatum& psi) {
  TensorVector t;
  const auto basis = whittaker_basis(psi, 2);
  for (int k = 0; k < 2; ++k) {
    const std::int64_t pick = g.range(-1, static_cast<std::int64_t>(basis.size()) - 1);
    const RVector v = pick < 0 ? unit_element() : monomial_element(basis[static_cast<std::size_t>(pick)]);
    t += tensor(g.polynomial(2, 2), v);
  }
  return t;
}

}  // namespace

TEST_CASE("trivial module") {
  const auto r = trivial_module();
  CHECK(r->act(Generator::L(-3), r->cyclic()).is_zero());
  CHECK(r->act(Generator::c1(), r->cyclic()).is_zero());
  CHECK(r->annihilation_bound(r->cyclic()) == kTrivialBound);
  const auto spec = OmegaSpec::sigma_zero(2, 1, 1);
  const auto p = X * Y + Y;
  for (const auto& g : generators_up_to(3))
    CHECK(tensor_act(spec, *r, g, tensor(p, r->cyclic())) == tensor(omega_act(spec, g, p), r->cyclic()));
}

TEST_CASE("whittaker handle delegates") {
  const auto psi = psi11();
  const auto h = whittaker_handle(psi);
  const auto v = monomial_element(parse_monomial("L[0] I[-1]"));
  for (const auto& g : generators_up_to(3)) CHECK(h->act(g, v) == whittaker_act(psi, g, v));
  CHECK(bound_is_sound(*h, v));
  CHECK(bound_is_sound(*h, h->cyclic()));
}

TEST_CASE("lifted modules satisfy the module axiom") {
  const auto psi = validate_whittaker({{Generator::L(1), 2}, {Generator::L(2), 1}, {Generator::c1(), 3}}, 1, 0);
  const auto lifted = lift_restricted(LiftStyle::VirasoroStyle, whittaker_handle(psi));
  std::vector<RVector> vs = {lifted->cyclic(), monomial_element(parse_monomial("L[0]")),
                             monomial_element(parse_monomial("L[-1] L[0]"))};
  const auto gens = generators_up_to(3);
  for (const auto& v : vs)
    for (const auto& a : gens)
      for (const auto& b : gens) {
        const auto lhs = lifted->act(bracket_basis(a, b), v);
        const auto rhs = lifted->act(element(a), lifted->act(element(b), v)) -
                         lifted->act(element(b), lifted->act(element(a), v));
        CHECK(lhs == rhs);
      }
  CHECK(lifted->act(Generator::H(0), lifted->cyclic()).is_zero());
}

TEST_CASE("tensor action examples") {
  const auto h = whittaker_handle(psi11());
  const auto s = OmegaSpec::sigma_zero(2, 0, 1);
  CHECK(tensor_act(s, *h, Generator::J(3), tensor(one, h->cyclic())).is_zero());
  const auto z = OmegaSpec::zero_sigma(2, 0, 1);
  const auto t = trivial_module();
  CHECK(tensor_act(z, *t, Generator::J(3), tensor(one, t->cyclic())) == tensor(BivariatePolynomial(8), t->cyclic()));
}

TEST_CASE("tensor module axiom") {
  testgen::Gen g(71);
  const std::vector<OmegaSpec> specs = {OmegaSpec::sigma_zero(2, Scalar::rational(1, 3), 1),
                                        OmegaSpec::zero_sigma(3, -1, X + one)};
  const std::vector<RestrictedHandle> modules = {trivial_module(), whittaker_handle(psi11())};
  for (const auto& spec : specs)
    for (const auto& r : modules)
      for (int k = 0; k < 40; ++k) {
        const Generator a = g.generator(3, true);
        const Generator b = g.generator(3, true);
        const TensorVector t = random_tensor(g, psi11());
        const auto lhs = tensor_act(spec, *r, bracket_basis(a, b), t);
        const auto rhs = tensor_act(spec, *r, element(a), tensor_act(spec, *r, element(b), t)) -
                         tensor_act(spec, *r, element(b), tensor_act(spec, *r, element(a), t));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("vandermonde extraction") {
  const auto s = OmegaSpec::sigma_zero(2, 0, 1);
  const auto r = trivial_module();
  const auto w = r->cyclic();

  const auto y = vandermonde_extract(s, *r, tensor(Y, w), 1);
  REQUIRE(y.components.size() == 2);
  CHECK(y.components[0] == tensor(X * Y, w));
  CHECK(y.components[1] == tensor(-X, w));

  const auto c = vandermonde_extract(s, *r, tensor(one, w), 0);
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0] == tensor(X, w));

  CHECK_THROWS_AS(vandermonde_extract(s, *r, tensor(Y, w), 2), Error);
}

TEST_CASE("top vandermonde component") {
  // For t = sum X^i Y^q (x) v_i + lower Y, the top component is (-1)^q sum X^{i+1} (x) v_i.
  const auto s = OmegaSpec::sigma_zero(2, 1, 1);
  const auto h = whittaker_handle(psi11());
  const auto v0 = h->cyclic();
  const auto v1 = monomial_element(parse_monomial("I[0]"));
  for (int q = 0; q <= 2; ++q) {
    const auto yq = BivariatePolynomial::monomial(0, q);
    const TensorVector t = tensor(yq, v0) + tensor(X * yq, v1) + tensor(X * X, v1);
    const auto result = vandermonde_extract(s, *h, t, q);
    const Scalar sign = q % 2 ? Scalar(-1) : Scalar(1);
    const TensorVector expected = sign * (tensor(X, v0) + tensor(X * X, v1));
    if (q > 0) CHECK(result.components.back() == expected);
    for (std::int64_t m = result.ms.back() + 2; m < result.ms.back() + 5; ++m) {
      TensorVector sum;
      for (std::size_t j = 0; j < result.components.size(); ++j)
        sum.add_scaled(result.components[j], Scalar(m).pow(static_cast<std::int64_t>(j)));
      CHECK(sum == scaled_h_action(s, *h, m, t));
    }
  }
}

TEST_CASE("closure probe") {
  const auto s = OmegaSpec::sigma_zero(2, 0, 1);
  const auto h = whittaker_handle(psi11());
  const auto report = tensor_closure_probe(s, *h, tensor(X * X * Y, h->cyclic()), {3});
  CHECK(report.reached_one_tensor);
  CHECK(report.all_regenerated());
  CHECK(report.targets == 10);

  const auto trivial = tensor_closure_probe(s, *h, tensor(one, h->cyclic()), {2});
  CHECK(trivial.reached_one_tensor);
  CHECK(trivial.one_tensor == h->cyclic());

  const auto sx = OmegaSpec::sigma_zero(2, 0, X);
  const auto blocked = tensor_closure_probe(sx, *h, tensor(X * X * Y, h->cyclic()), {3});
  CHECK_FALSE(blocked.reached_one_tensor);
  CHECK(blocked.obstruction.has_value());
}

TEST_CASE("J tail witness") {
  const auto h = whittaker_handle(psi11());
  const auto t = trivial_module();
  CHECK(j_nilpotency_witness(OmegaSpec::sigma_zero(2, 0, 1), *h, tensor(one, h->cyclic())) == JTail::LocallyFinite);
  CHECK(j_nilpotency_witness(OmegaSpec::zero_sigma(2, 0, 1), *t, tensor(one, t->cyclic())) == JTail::InjectiveTail);
  CHECK(j_nilpotency_witness(OmegaSpec::zero_sigma(2, 0, 1), *t, TensorVector()) == JTail::LocallyFinite);
}
