#include "mtcodes/error.hpp"

namespace mtc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::AllMinorsZero: return "AllMinorsZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvarianceViolation: return "InvarianceViolation";
    case ErrorCode::FormulaRankDisagreement: return "FormulaRankDisagreement";
    case ErrorCode::ConditionNotMet: return "ConditionNotMet";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace mtc
