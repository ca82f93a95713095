#include "apnforge/errors.hpp"

namespace apnforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::DegreeNotMultipleOfThree: return "DegreeNotMultipleOfThree";
    case ErrorCode::TraceNotZero: return "TraceNotZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InternalNonExactDivision: return "InternalNonExactDivision";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DegreeShapeMismatch: return "DegreeShapeMismatch";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::DegreeNot12: return "DegreeNot12";
    case ErrorCode::NotQAffine: return "NotQAffine";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCoefficient: return "UnknownCoefficient";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace apnforge
