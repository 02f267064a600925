#include "pgca/scalar.hpp"

#include <cctype>
#include <utility>

#include "pgca/error.hpp"

namespace pgca {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidTranslation: return "InvalidTranslation";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::DerivedAlgebraViolation: return "DerivedAlgebraViolation";
    case ErrorKind::OutOfSubalgebra: return "OutOfSubalgebra";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnsupportedMonomial: return "UnsupportedMonomial";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateSystem: return "DegenerateSystem";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (sgn(im_) == 0) return Scalar(mpq_class(1) / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return *this *= o.inverse();
}

Scalar Scalar::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorKind::ZeroToNegativePower, "0 raised to " + std::to_string(exponent));
    return inverse().pow(-exponent);
  }
  Scalar result(1);
  Scalar base = *this;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar scalar_pow(const Scalar& base, std::int64_t exponent) { return base.pow(exponent); }

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty rational in '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_run = false;
  for (std::size_t k = start; k < text.size(); ++k) {
    char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_run = true;
    } else if (c == '/' && !seen_slash && digit_run) {
      seen_slash = true;
      digit_run = false;
    } else {
      throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "' in '" + std::string(whole) + "'");
    }
  }
  if (!digit_run) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  std::string body(text[0] == '+' ? text.substr(1) : text);
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    mpz_class den(body.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(whole) + "'");
  }
  mpq_class q(body);
  q.canonicalize();
  return q;
}

// Imaginary term without the trailing "i": "", "+", "-" mean unit coefficients.
mpq_class parse_imag_coeff(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  if (text.back() == '*') text.remove_suffix(1);
  return parse_rational(text, whole);
}

}  // namespace

Scalar Scalar::parse(std::string_view raw) {
  std::string cleaned;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  std::string_view text(cleaned);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text, raw));
  text.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(mpq_class(0), parse_imag_coeff(text, raw));
  return Scalar(parse_rational(text.substr(0, split), raw), parse_imag_coeff(text.substr(split), raw));
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) != 0) {
    mpq_class mag = abs(im_);
    if (out.empty()) {
      if (sgn(im_) < 0) out += "-";
    } else {
      out += sgn(im_) < 0 ? "-" : "+";
    }
    out += mag.get_str() + "*i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pgca
