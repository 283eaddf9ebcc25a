#include "semihilb/error.hpp"

namespace semihilb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateContext: return "DegenerateContext";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NotAPositive: return "NotAPositive";
    case ErrorCode::SingularOperator: return "SingularOperator";
    case ErrorCode::SingularPreconditioner: return "SingularPreconditioner";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace semihilb
