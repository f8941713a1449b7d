#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace casimir {

enum class ErrorKind {
  DivisionByZero,
  SingularSubstitution,
  ShapeError,
  SingularMatrix,
  NotLinear,
  NoSolution,
  SpecError,
  IndexError,
  UnsupportedGenerator,
  NormalizationStuck,
  NotSymmetrizable,
  DomainError,
  Inconclusive,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` is the machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace casimir
