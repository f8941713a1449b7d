#include "casimir/error.hpp"

namespace casimir {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularSubstitution: return "SingularSubstitution";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::SpecError: return "SpecError";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::UnsupportedGenerator: return "UnsupportedGenerator";
    case ErrorKind::NormalizationStuck: return "NormalizationStuck";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace casimir
