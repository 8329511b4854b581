#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hooleyff {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  ZeroArgument,
  TableUnavailable,
  DivisionByZeroPoly,
  NotSquarefree,
  NotMonic,
  Reducible,
  TooLarge,
  ExponentOutOfRange,
  HypothesisViolation,
  NotPrimitive,
  KTooSmall,
  NotCoprime,
  DegreeTooLargeForCharacteristic,
  RingMismatch,
  XNotPowerOfQ,
  NTooLarge,
  RangeViolation,
  CharacteristicTooSmall,
  XTooLarge,
  NotIrreducible,
  ConfigParse,
  Validation,
  Io,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// All domain failures are reported through this exception. The message
/// always starts with the code name so CLI output can be grepped for it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hooleyff
