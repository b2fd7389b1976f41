#include "shlin/error.hpp"

namespace shlin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::HTooLarge: return "HTooLarge";
    case ErrorCode::ScalarZero: return "ScalarZero";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::DistanceTooSmall: return "DistanceTooSmall";
    case ErrorCode::DuplicateColumns: return "DuplicateColumns";
    case ErrorCode::RedundancyTooSmall: return "RedundancyTooSmall";
    case ErrorCode::NotShLinear: return "NotShLinear";
    case ErrorCode::DimensionWindowViolated: return "DimensionWindowViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingletonViolation: return "SingletonViolation";
    case ErrorCode::NoWitness: return "NoWitness";
  }
  return "Unknown";
}

}  // namespace shlin
