#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shlin {

enum class ErrorCode {
  NotPrime,
  ReduciblePolynomial,
  UnsupportedOrder,
  DivisionByZero,
  InvalidArgument,
  DimensionMismatch,
  FieldMismatch,
  DuplicateElement,
  BudgetExceeded,
  HTooLarge,
  ScalarZero,
  PreconditionViolated,
  SpaceTooLarge,
  DistanceTooSmall,
  DuplicateColumns,
  RedundancyTooSmall,
  NotShLinear,
  DimensionWindowViolated,
  ParseError,
  SingletonViolation,
  NoWitness,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure surfaced by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shlin
