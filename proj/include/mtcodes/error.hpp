#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtc {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  FieldMismatch,
  ZeroInverse,
  DivisionByZeroPoly,
  BothZero,
  ZeroArgument,
  NotCoprime,
  ShapeMismatch,
  NotSquare,
  TooLarge,
  BadSize,
  AllMinorsZero,
  IndexOutOfRange,
  InternalDisagreement,
  CapExceeded,
  LengthMismatch,
  InvarianceViolation,
  FormulaRankDisagreement,
  ConditionNotMet,
  CertificateFailure,
  ParseError,
  SemanticError,
  PropertyViolation,
  AssertionFailure,
  UsageError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Errors that signal a broken internal invariant rather than bad input.
inline bool is_invariant_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::InternalDisagreement:
    case ErrorCode::InvarianceViolation:
    case ErrorCode::FormulaRankDisagreement:
    case ErrorCode::CertificateFailure:
    case ErrorCode::PropertyViolation:
    case ErrorCode::AssertionFailure:
      return true;
    default:
      return false;
  }
}

}  // namespace mtc
