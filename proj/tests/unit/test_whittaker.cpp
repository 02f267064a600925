#include <doctest.h>

#include "pgca/error.hpp"
#include "pgca/twist.hpp"
#include "pgca/whittaker.hpp"
#include "testgen.hpp"

using namespace pgca;

namespace {

InducedVector vec(std::string_view monomial, Scalar c = 1) { return monomial_element(parse_monomial(monomial), c); }

WhittakerDatum datum(std::int64_t m, std::int64_t n, std::map<Generator, Scalar> raw) {
  return validate_whittaker(raw, m, n);
}

WhittakerDatum psi11() { return datum(1, 1, {{Generator::I(1), 1}, {Generator::J(1), 1}}); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Inconclusive;
}

bool in_span(const std::vector<InducedVector>& kernel, const InducedVector& v) {
  SparseSpan<Word> span;
  for (const auto& k : kernel) span.insert(k);
  return span.contains(v);
}

}  // namespace

TEST_CASE("datum validation") {
  CHECK(psi11().psi(Generator::I(1)) == Scalar(1));
  CHECK(kind_of([] { datum(1, 1, {{Generator::I(2), 1}}); }) == ErrorKind::DerivedAlgebraViolation);
  CHECK(kind_of([] { datum(1, 1, {{Generator::L(0), 1}}); }) == ErrorKind::OutOfSubalgebra);
  CHECK(kind_of([] { datum(1, 1, {{Generator::L(3), 1}}); }) == ErrorKind::DerivedAlgebraViolation);
  CHECK(kind_of([] { datum(2, 1, {{Generator::H(4), 1}}); }) == ErrorKind::DerivedAlgebraViolation);
  const auto d = datum(1, 1, {{Generator::c2(), 7}, {Generator::L(2), 3}});
  CHECK(d.psi(Generator::c2()) == Scalar(7));
  CHECK(d.psi(Generator::L(2)) == Scalar(3));
  CHECK(d.is_free(Generator::L(0)));
  CHECK_FALSE(d.is_free(Generator::I(1)));
  CHECK(d.free_weight(parse_monomial("L[0] I[-1]")) == 1 + 2);
}

TEST_CASE("action examples") {
  const auto psi = psi11();
  CHECK(whittaker_act(psi, Generator::I(1), unit_element()) == unit_element());
  CHECK(whittaker_act(psi, Generator::H(1), vec("I[0]")) == unit_element());
  CHECK(whittaker_act(psi, Generator::L(0), vec("I[0]")) == vec("L[0] I[0]"));
  // L1 I0 w = I0 L1 w - I1 w = -w
  CHECK(whittaker_act(psi, Generator::L(1), vec("I[0]")) == Scalar(-1) * unit_element());
  const auto d = datum(1, 1, {{Generator::c2(), 5}});
  const auto v = vec("L[0] H[-2]") + vec("J[0]", 3);
  CHECK(whittaker_act(d, Generator::c2(), v) == Scalar(5) * v);
}

TEST_CASE("module axiom on W_psi") {
  const std::vector<WhittakerDatum> data = {
      datum(1, 1, {{Generator::I(1), 1}, {Generator::J(1), 2}, {Generator::L(2), 3}, {Generator::c1(), 1},
                   {Generator::c2(), -2}, {Generator::c3(), Scalar::rational(1, 2)}}),
      datum(2, 1, {{Generator::I(2), 1}, {Generator::J(2), -1}, {Generator::I(1), 4}, {Generator::H(2), 1},
                   {Generator::L(3), 2}, {Generator::c3(), 3}})};
  for (const auto& psi : data) {
    const WhittakerModule w(psi);
    auto basis = whittaker_basis(psi, 3);
    basis.insert(basis.begin(), Word{});
    const auto gens = generators_up_to(3);
    std::size_t checks = 0;
    for (const auto& word : basis)
      for (const auto& a : gens)
        for (const auto& b : gens) {
          if (b < a) continue;
          const InducedVector v = monomial_element(word);
          const auto lhs = w.act(bracket_basis(a, b), v);
          const auto rhs = w.act(a, w.act(b, v)) - w.act(b, w.act(a, v));
          CHECK_MESSAGE(lhs == rhs, a.to_string() << " " << b.to_string() << " on " << format_monomial(word));
          ++checks;
        }
    CHECK(checks > 1000);
  }
}

TEST_CASE("actions stay on free monomials") {
  testgen::Gen g(51);
  const auto psi = datum(2, 1, {{Generator::I(2), 1}, {Generator::J(2), 3}});
  const WhittakerModule w(psi);
  for (int k = 0; k < 200; ++k) {
    const auto v = monomial_element(whittaker_basis(psi, 3).at(g.range(0, 20)));
    for (const auto& [word, c] : w.act(g.generator(5, true), v))
      for (const auto& x : word) CHECK(psi.is_free(x));
  }
}

TEST_CASE("annihilation bound is sound") {
  testgen::Gen g(52);
  const auto psi = psi11();
  const WhittakerModule w(psi);
  const auto basis = whittaker_basis(psi, 4);
  for (int k = 0; k < 50; ++k) {
    const auto v = monomial_element(basis.at(g.range(0, static_cast<std::int64_t>(basis.size()) - 1)));
    const auto bound = w.annihilation_bound(v);
    for (std::int64_t p = bound + 1; p <= bound + 4; ++p)
      for (Family f : {Family::L, Family::H, Family::I, Family::J}) CHECK(w.act(Generator(f, p), v).is_zero());
  }
}

TEST_CASE("known Whittaker vectors") {
  // (L0 + H0) w and I0 w when psi(I1) = 0, psi(J1) = 1.
  const auto psi = datum(1, 1, {{Generator::J(1), 1}});
  const WhittakerModule w(psi);
  CHECK(is_whittaker_vector(w, vec("I[0]"), 8));
  CHECK(is_whittaker_vector(w, vec("L[0]") + vec("H[0]"), 8));
  CHECK_FALSE(is_whittaker_vector(w, vec("J[0]"), 8));
  CHECK_FALSE(is_whittaker_vector(WhittakerModule(psi11()), vec("I[0]"), 8));
}

TEST_CASE("search finds no witness in the irreducible cases") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {3, 1}}) {
    const std::int64_t k = m + n - 1;
    const auto report = singular_vector_search(datum(m, n, {{Generator::I(k), 1}, {Generator::J(k), 1}}), 4);
    CHECK_FALSE(report.found());
    CHECK(report.spot_check_ok);
    CHECK(report.basis_size > 0);
  }
}

TEST_CASE("search witnesses") {
  SUBCASE("zero I value gives I_{n-1}") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {3, 1}, {2, 1}}) {
      const auto report = singular_vector_search(datum(m, n, {{Generator::J(m + n - 1), 1}}), 2);
      CHECK(report.found());
      CHECK(in_span(report.kernel, monomial_element({Generator::I(n - 1)})));
    }
  }
  SUBCASE("psi_{1,2} with alpha = beta = 1") {
    const auto report = singular_vector_search(datum(1, 2, {{Generator::I(2), 1}, {Generator::J(2), 1}}), 3);
    REQUIRE(report.found());
    CHECK(in_span(report.kernel, vec("I[1]") + vec("J[1]")));
  }
  SUBCASE("psi_{2,3} with alpha = 2, beta = 3") {
    const auto report = singular_vector_search(datum(2, 3, {{Generator::I(4), 2}, {Generator::J(4), 3}}), 2);
    CHECK(in_span(report.kernel, vec("I[2]") + vec("J[2]", Scalar::rational(2, 3))));
    CHECK_FALSE(in_span(report.kernel, vec("I[2]") + vec("J[2]")));
  }
  SUBCASE("psi_{1,0} after normalization") {
    const auto psi = datum(1, 0, {{Generator::I(0), 1}, {Generator::J(0), 1}, {Generator::L(2), 3}, {Generator::H(1), 2}});
    const auto twisted = solve_twist(psi).twisted;
    const auto report = singular_vector_search(twisted, 3);
    CHECK(in_span(report.kernel, vec("L[0]")));
  }
  SUBCASE("psi_{1,4} five-term witness") {
    const auto report = singular_vector_search(datum(1, 4, {{Generator::I(4), 1}, {Generator::J(4), 1}}), 2);
    CHECK(report.kernel.size() == 1);
    const auto expected = example_psi14_witness(1, 1).witness;
    CHECK(in_span(report.kernel, expected));
  }
}

TEST_CASE("search kernel vectors are Whittaker vectors") {
  const auto psi = datum(1, 2, {{Generator::I(2), 2}, {Generator::J(2), -1}});
  const auto report = singular_vector_search(psi, 3);
  const WhittakerModule w(psi);
  for (const auto& v : report.kernel) CHECK(is_whittaker_vector(w, v, report.index_max + 6));
}
