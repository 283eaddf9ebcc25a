#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semihilb {

enum class ErrorCode {
  NonSquare,
  NotHermitian,
  NotPSD,
  NotPositive,
  ConvergenceFailure,
  DimensionMismatch,
  DegenerateContext,
  UnknownId,
  DomainViolation,
  NotUnitVector,
  NotAPositive,
  SingularOperator,
  SingularPreconditioner,
  InvalidSpec,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable error code. Every failure raised by
/// the library is an Error; the CLI maps the code to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semihilb
