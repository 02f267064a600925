#pragma once

#include <compare>
#include <string>

#include "pgca/combination.hpp"

namespace pgca {

/// Exponent pair of a monomial X^x Y^y, ordered by total degree first.
struct Exponent {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.x <=> b.x;
  }
};

/// Sparse polynomial in X, Y over Gaussian rationals.
class BivariatePolynomial {
 public:
  using Terms = Combination<Exponent>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const Scalar& c) : terms_(Exponent{0, 0}, c) {}  // NOLINT(google-explicit-constructor)
  BivariatePolynomial(int c) : BivariatePolynomial(Scalar(c)) {}      // NOLINT(google-explicit-constructor)
  explicit BivariatePolynomial(Terms terms) : terms_(std::move(terms)) {}

  static BivariatePolynomial monomial(int x_exp, int y_exp, const Scalar& coeff = Scalar(1));
  static BivariatePolynomial X() { return monomial(1, 0); }
  static BivariatePolynomial Y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  Scalar coeff(int x_exp, int y_exp) const { return terms_.coeff(Exponent{x_exp, y_exp}); }
  bool is_zero() const { return terms_.is_zero(); }
  bool is_constant() const;
  /// True when no term involves Y.
  bool is_univariate_x() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int x_degree() const;
  int y_degree() const;

  /// p(X + dx, Y + dy), expanded exactly.
  BivariatePolynomial shift(const Scalar& dx, const Scalar& dy) const;

  Scalar evaluate(const Scalar& x, const Scalar& y) const;

  std::string to_string() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) { terms_ += o.terms_; return *this; }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) { terms_ -= o.terms_; return *this; }
  BivariatePolynomial& operator*=(const Scalar& s) { terms_ *= s; return *this; }
  BivariatePolynomial operator-() const { return BivariatePolynomial(-terms_); }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Scalar& s) { return a *= s; }
  friend BivariatePolynomial operator*(const Scalar& s, BivariatePolynomial a) { return a *= s; }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) { return !(a == b); }

 private:
  Terms terms_;
};

BivariatePolynomial poly_shift(const BivariatePolynomial& p, const Scalar& dx, const Scalar& dy);

}  // namespace pgca
