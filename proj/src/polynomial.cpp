#include "pgca/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace pgca {

BivariatePolynomial BivariatePolynomial::monomial(int x_exp, int y_exp, const Scalar& coeff) {
  return BivariatePolynomial(Terms(Exponent{x_exp, y_exp}, coeff));
}

bool BivariatePolynomial::is_constant() const {
  return terms_.is_zero() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

bool BivariatePolynomial::is_univariate_x() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.y == 0; });
}

int BivariatePolynomial::degree() const {
  return terms_.is_zero() ? -1 : terms_.terms().rbegin()->first.total();
}

int BivariatePolynomial::x_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int BivariatePolynomial::y_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

namespace {

// Coefficients of (Z + d)^n in powers of Z, lowest first.
std::vector<Scalar> binomial_row(int n, const Scalar& d) {
  std::vector<Scalar> row(static_cast<std::size_t>(n) + 1);
  mpz_class binom = 1;
  Scalar dpow(1);
  // (Z+d)^n = sum_k C(n,k) d^(n-k) Z^k; fill from k = n downward.
  for (int k = n; k >= 0; --k) {
    row[static_cast<std::size_t>(k)] = Scalar(mpq_class(binom)) * dpow;
    binom = binom * k / (n - k + 1);
    dpow *= d;
  }
  return row;
}

}  // namespace

BivariatePolynomial BivariatePolynomial::shift(const Scalar& dx, const Scalar& dy) const {
  if (dx.is_zero() && dy.is_zero()) return *this;
  Terms out;
  for (const auto& [e, c] : terms_) {
    auto xs = binomial_row(e.x, dx);
    auto ys = binomial_row(e.y, dy);
    for (int i = 0; i <= e.x; ++i) {
      const Scalar& cx = xs[static_cast<std::size_t>(i)];
      if (cx.is_zero()) continue;
      for (int j = 0; j <= e.y; ++j) {
        const Scalar& cy = ys[static_cast<std::size_t>(j)];
        if (cy.is_zero()) continue;
        out.add_term(Exponent{i, j}, c * cx * cy);
      }
    }
  }
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial poly_shift(const BivariatePolynomial& p, const Scalar& dx, const Scalar& dy) {
  return p.shift(dx, dy);
}

Scalar BivariatePolynomial::evaluate(const Scalar& x, const Scalar& y) const {
  Scalar total;
  for (const auto& [e, c] : terms_) total += c * x.pow(e.x) * y.pow(e.y);
  return total;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial::Terms out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(Exponent{ea.x + eb.x, ea.y + eb.y}, ca * cb);
  return BivariatePolynomial(std::move(out));
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.is_zero()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  for (auto it = terms_.terms().rbegin(); it != terms_.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (e.x > 0) mono += e.x == 1 ? "X" : "X^" + std::to_string(e.x);
    if (e.y > 0) mono += std::string(mono.empty() ? "" : "*") + (e.y == 1 ? "Y" : "Y^" + std::to_string(e.y));
    if (mono.empty()) {
      out += "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += "(" + c.to_string() + ")*" + mono;
    }
  }
  return out;
}

}  // namespace pgca
