#include <doctest.h>

#include "pgca/enveloping.hpp"
#include "pgca/error.hpp"
#include "testgen.hpp"

using namespace pgca;

namespace {

EnvelopingElement mono(std::string_view text) { return monomial_element(parse_monomial(text)); }

EnvelopingElement lift(const AlgebraElement& x) {
  EnvelopingElement out;
  for (const auto& [g, c] : x) out.add_term(Word{g}, c);
  return out;
}

}  // namespace

TEST_CASE("single straightening steps") {
  CHECK(straighten(parse_monomial("I[0] J[1]")) == mono("J[1] I[0]"));
  CHECK(straighten(parse_monomial("L[1] L[-1]")) == mono("L[-1] L[1]") + Scalar(-2) * mono("L[0]"));
  CHECK(straighten(parse_monomial("H[1] H[-1]")) == mono("H[-1] H[1]") + mono("c3"));
  CHECK(straighten(Word{}) == unit_element());
}

TEST_CASE("multiplication") {
  const auto v = mono("H[2] I[-1]") + Scalar(3) * mono("J[0]");
  CHECK(multiply(unit_element(), v) == v);
  CHECK(multiply(mono("L[1]"), mono("L[-1]")) - multiply(mono("L[-1]"), mono("L[1]")) ==
        Scalar(-2) * mono("L[0]"));
  CHECK(multiply(mono("I[0]^2"), mono("J[0]")) == mono("J[0] I[0]^2"));
}

TEST_CASE("monomial format round trip") {
  const Word w = parse_monomial("L[2]^3 H[0] I[-1]^2");
  CHECK(w.size() == 6);
  CHECK(format_monomial(w) == "L[2]^3 H[0] I[-1]^2");
  CHECK(format_monomial(Word{}) == "1");
}

TEST_CASE("leftmost and rightmost reduction agree") {
  testgen::Gen g(31);
  Straightener left(canonical_order(), ReductionStrategy::Leftmost);
  Straightener right(canonical_order(), ReductionStrategy::Rightmost);
  for (int k = 0; k < 100; ++k) {
    const Word w = g.word(5, 3);
    const auto a = left.straighten(w);
    const auto b = right.straighten(w);
    CHECK_MESSAGE(a == b, format_monomial(w));
    for (const auto& [m, c] : a) CHECK(left.is_canonical(m));
  }
}

TEST_CASE("commutator of generators in U equals their bracket") {
  testgen::Gen g(32);
  for (int k = 0; k < 300; ++k) {
    const Generator a = g.generator(4, true);
    const Generator b = g.generator(4, true);
    const auto ab = multiply(monomial_element({a}), monomial_element({b}));
    const auto ba = multiply(monomial_element({b}), monomial_element({a}));
    CHECK(ab - ba == lift(bracket_basis(a, b)));
  }
}

TEST_CASE("multiplication is associative") {
  testgen::Gen g(33);
  for (int k = 0; k < 60; ++k) {
    const auto u = monomial_element(g.word(2, 2), g.rational());
    const auto v = monomial_element(g.word(2, 2), g.rational()) + monomial_element(g.word(2, 2));
    const auto w = monomial_element(g.word(2, 2));
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
  }
}

TEST_CASE("straightening a canonical word is the identity") {
  testgen::Gen g(34);
  for (int k = 0; k < 100; ++k) {
    Word w = g.word(5, 3);
    std::sort(w.begin(), w.end());
    CHECK(straighten(w) == monomial_element(w));
  }
}
