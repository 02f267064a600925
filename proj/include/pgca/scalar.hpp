#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace pgca {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept canonical (positive denominator, lowest terms) by
/// every constructor and operator, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long num, long den);
  static Scalar gaussian(long re, long im) { return Scalar(mpq_class(re), mpq_class(im)); }
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses the "a/b+c/d*i" serialization; also accepts "i", "-i", "2*i".
  static Scalar parse(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_rational() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  /// Integer power; negative exponents require a nonzero base.
  Scalar pow(std::int64_t exponent) const;

  std::string to_string() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Arbitrary but total order (real part, then imaginary part); only used for
  /// deterministic containers, not as a field order.
  friend bool lex_less(const Scalar& a, const Scalar& b) {
    return a.re_ < b.re_ || (a.re_ == b.re_ && a.im_ < b.im_);
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar scalar_pow(const Scalar& base, std::int64_t exponent);

}  // namespace pgca
