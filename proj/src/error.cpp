#include "ringforge/error.hpp"

namespace ringforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::NoNonsquare: return "NoNonsquare";
    case ErrorCode::SingularC: return "SingularC";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::UnsupportedS: return "UnsupportedS";
    case ErrorCode::AutomorphismConstraint: return "AutomorphismConstraint";
    case ErrorCode::DependentMatrices: return "DependentMatrices";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::InvariantMismatch: return "InvariantMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotCovered: return "NotCovered";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ringforge
