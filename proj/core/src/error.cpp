#include "hooleyff/error.hpp"

namespace hooleyff {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::TableUnavailable: return "TableUnavailable";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DegreeTooLargeForCharacteristic: return "DegreeTooLargeForCharacteristic";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::XNotPowerOfQ: return "XNotPowerOfQ";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::XTooLarge: return "XTooLarge";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::ConfigParse: return "ConfigParse";
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

}  // namespace hooleyff
