#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringforge {

enum class ErrorCode {
  NonPrimeP,
  DegreeZero,
  ZeroInverse,
  MixedFields,
  NoNonsquare,
  SingularC,
  ShapeMismatch,
  RangeError,
  UnsupportedS,
  AutomorphismConstraint,
  DependentMatrices,
  TooLargeForExhaustive,
  ModeMismatch,
  InvariantMismatch,
  BudgetExceeded,
  NotCovered,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ringforge
