#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieforge {

enum class ErrorCode {
  DimensionMismatch,
  NotAnIdeal,
  NotClosed,
  LayoutMismatch,
  SingularMatrix,
  UnknownName,
  BadParams,
  BadN,
  NotApplicable,
  ParseError,
  UnknownBasisName,
  InconsistentAntisymmetry,
  JacobiViolation,
};

/// Upper-case identifier used in diagnostics, e.g. "DIMENSION_MISMATCH".
std::string_view to_string(ErrorCode code) noexcept;

/// All contract violations raised by the library carry one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lieforge
