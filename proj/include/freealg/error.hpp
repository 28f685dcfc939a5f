#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace freealg {

enum class ErrorCode {
  MixedFields,
  DivisionByZero,
  BadPrime,
  BadFieldSelector,
  AlphabetMismatch,
  ArityMismatch,
  ZeroPolynomial,
  BadWeights,
  SyntaxError,
  UnknownVariable,
  BadCoefficient,
  ZeroInput,
  BadK,
  HypothesesNotMet,
  NotAutomorphism,
  ConstantInput,
  NoCertificateWithinBounds,
  NotARetraction,
  ProperSubductionFailure,
  NoConvergence,
  NotFixing,
  PreconditionFailed,
  CapExceeded,
  FloorCollapse,
  NotASquareLeading,
  NotAnNthPowerLeading,
  CharDividesN,
  BasisExhausted,
  InsufficientFloor,
  ImprimitiveU,
  BadBound,
  BadArgument,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every library operation. `context` carries
/// machine-readable detail (failed clause, offending state, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::map<std::string, std::string>& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::map<std::string, std::string> context_;
};

}  // namespace freealg
