#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgca {

enum class ErrorKind {
  ZeroToNegativePower,
  DivisionByZero,
  ParseError,
  SingularMatrix,
  DimensionMismatch,
  InvalidTranslation,
  InvalidSpec,
  DerivedAlgebraViolation,
  OutOfSubalgebra,
  LengthMismatch,
  UnsupportedMonomial,
  ZeroVector,
  PreconditionViolated,
  DegenerateSystem,
  Inconclusive,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pgca
