#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jlint {

enum class ErrorCode {
  MalformedLine,
  ArcCount,
  InconsistentOrientation,
  InvalidComponent,
  InvalidCrossing,
  UnknownName,
  CapExceeded,
  EmptyDiagram,
  CalibrationFailed,
  NotAKnot,
  NotMultiComponent,
  ClassUnsupported,
  OrderTooLow,
  DenVanishesAtOne,
  DivisionByZero,
  NotPrime,
  ParseError,
};

/// Upper-snake identifier used in CLI messages, e.g. "ARC_COUNT".
std::string_view to_string(ErrorCode code) noexcept;

/// Raised for malformed inputs only. Mathematical violations are reported,
/// never thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jlint
