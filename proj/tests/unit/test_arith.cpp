#include <doctest.h>

#include "pgca/error.hpp"
#include "pgca/matrix.hpp"
#include "pgca/polynomial.hpp"
#include "pgca/scalar.hpp"
#include "testgen.hpp"

using namespace pgca;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Inconclusive;
}

// Leibniz expansion, independent of the elimination code.
Scalar leibniz(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  Scalar total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Scalar term = inversions % 2 ? Scalar(-1) : Scalar(1);
    for (std::size_t r = 0; r < n; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ScalarMatrix random_matrix(testgen::Gen& g, std::size_t rows, std::size_t cols, long bound = 3) {
  ScalarMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(static_cast<long>(g.range(-bound, bound)));
  return m;
}

}  // namespace

TEST_CASE("scalar pow") {
  CHECK(Scalar(2).pow(-1) == Scalar::rational(1, 2));
  CHECK(Scalar::gaussian(1, 1).pow(2) == Scalar::gaussian(0, 2));
  CHECK(Scalar(5).pow(0) == Scalar(1));
  CHECK(kind_of([] { Scalar().pow(-1); }) == ErrorKind::ZeroToNegativePower);
}

TEST_CASE("scalar parse and print round trip") {
  CHECK(Scalar::parse("3/6") == Scalar::rational(1, 2));
  CHECK(Scalar::parse("-i") == Scalar::gaussian(0, -1));
  CHECK(Scalar::parse("1/2+3/4*i") == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(kind_of([] { Scalar::parse("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Scalar::parse("abc"); }) == ErrorKind::ParseError);
  testgen::Gen g(11);
  for (int k = 0; k < 200; ++k) {
    const Scalar s = g.gaussian();
    CHECK(Scalar::parse(s.to_string()) == s);
  }
}

TEST_CASE("scalar field laws on random gaussian rationals") {
  testgen::Gen g(1);
  for (int k = 0; k < 300; ++k) {
    const Scalar a = g.gaussian(), b = g.gaussian(), c = g.gaussian();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
  CHECK(kind_of([] { Scalar(1) / Scalar(); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("polynomial shift") {
  const auto X = BivariatePolynomial::X();
  const auto Y = BivariatePolynomial::Y();
  CHECK(Y.shift(0, -1) == Y - BivariatePolynomial(1));
  CHECK((X * X).shift(-1, 0) == X * X - Scalar(2) * X + BivariatePolynomial(1));
  CHECK(BivariatePolynomial(1).shift(Scalar(7), Scalar(-3)) == BivariatePolynomial(1));
}

TEST_CASE("polynomial shift agrees with evaluation at random points") {
  testgen::Gen g(2);
  for (int k = 0; k < 100; ++k) {
    const auto p = g.polynomial(4);
    const Scalar dx = g.rational(), dy = g.rational(), x = g.gaussian(), y = g.gaussian();
    CHECK(p.shift(dx, dy).evaluate(x, y) == p.evaluate(x + dx, y + dy));
  }
}

TEST_CASE("polynomial ring laws") {
  testgen::Gen g(3);
  for (int k = 0; k < 100; ++k) {
    const auto p = g.polynomial(3), q = g.polynomial(3), r = g.polynomial(2);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    const Scalar x = g.rational(), y = g.rational();
    CHECK((p * q).evaluate(x, y) == p.evaluate(x, y) * q.evaluate(x, y));
  }
}

TEST_CASE("matrix solve") {
  CHECK(matrix_solve(ScalarMatrix::identity(2), {3, 5}) == ScalarVector{3, 5});
  CHECK(matrix_solve(ScalarMatrix{{3, 3}, {-1, 1}}, {6, 0}) == ScalarVector{1, 1});
  CHECK(kind_of([] { matrix_solve(ScalarMatrix{{1, 1}, {1, 1}}, {1, 0}); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("matrix nullspace") {
  CHECK(matrix_nullspace(ScalarMatrix::identity(3)).empty());
  CHECK(matrix_nullspace(ScalarMatrix(2, 2)).size() == 2);
}

TEST_CASE("determinant matches the Leibniz expansion") {
  testgen::Gen g(4);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.range(1, 5));
    const ScalarMatrix m = random_matrix(g, n, n);
    CHECK(m.determinant() == leibniz(m));
  }
}

TEST_CASE("nullspace vectors are killed and rank-nullity holds") {
  testgen::Gen g(5);
  for (int k = 0; k < 60; ++k) {
    const std::size_t rows = static_cast<std::size_t>(g.range(1, 5));
    const std::size_t cols = static_cast<std::size_t>(g.range(1, 6));
    const ScalarMatrix m = random_matrix(g, rows, cols, 1);
    const auto kernel = matrix_nullspace(m);
    CHECK(kernel.size() + m.rank() == cols);
    for (const auto& v : kernel) CHECK(m * v == ScalarVector(rows));

    std::vector<SparseRow> sparse;
    for (std::size_t r = 0; r < rows; ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < cols; ++c) row.add_term(c, m(r, c));
      sparse.push_back(row);
    }
    const auto sk = sparse_nullspace(sparse, cols);
    CHECK(sk.size() == kernel.size());
    for (const auto& v : sk) CHECK(m * v == ScalarVector(rows));
  }
}
