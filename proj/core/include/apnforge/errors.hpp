#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apnforge {

enum class ErrorCode {
  DegreeOutOfRange,
  InvalidModulus,
  ReducibleModulus,
  ContextMismatch,
  DegreeMismatch,
  NoRoot,
  DegreeNotMultipleOfThree,
  TraceNotZero,
  FieldTooLarge,
  DegreeTooLarge,
  DegreeBoundExceeded,
  DivisionByZero,
  InternalNonExactDivision,
  DegreeTooSmall,
  DegreeShapeMismatch,
  SearchSpaceTooLarge,
  DegreeNot12,
  NotQAffine,
  InvalidArgument,
  SyntaxError,
  UnknownCoefficient,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above. Callers
/// that need to tell validation problems from internal assertion failures
/// switch on code() (see is_internal()).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] bool is_internal() const noexcept {
    return code_ == ErrorCode::Internal || code_ == ErrorCode::InternalNonExactDivision ||
           code_ == ErrorCode::NoRoot;
  }

 private:
  ErrorCode code_;
};

/// Thrown by the text parsers; position is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError, message + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::Internal, what);
}

}  // namespace apnforge
