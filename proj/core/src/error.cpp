#include "matgamma/error.hpp"

namespace matgamma {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NonFiniteInput: return "non-finite input";
    case ErrorCode::Singular: return "singular matrix";
    case ErrorCode::NonConvergence: return "convergence failure";
    case ErrorCode::PoleProximity: return "pole proximity";
    case ErrorCode::BranchCut: return "eigenvalue on the closed negative real axis";
    case ErrorCode::Precondition: return "precondition violation";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::SylvesterCollision: return "Sylvester eigenvalue collision";
    case ErrorCode::OutOfRange: return "argument out of range";
    case ErrorCode::MalformedInput: return "malformed input";
    case ErrorCode::Refused: return "refused";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace matgamma
