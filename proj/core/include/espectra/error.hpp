#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace espectra {

enum class ErrorCode {
  InvalidArgument,
  NotHomogeneous,
  ParseError,
  DenominatorSingular,
  MatrixTooLarge,
  ResampleExhausted,
  DegreeBoundTooSmall,
  UnsupportedDimension,
  DegenerateRestriction,
  IsotropicRoot,
  RecoveryFailed,
  ZeroCoefficient,
  NormZero,
  HypothesisFailed,
  RatioMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure carries one of the codes above so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace espectra
