#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matgamma {

enum class ErrorCode {
  DimensionMismatch,
  NonFiniteInput,
  Singular,
  NonConvergence,
  PoleProximity,
  BranchCut,       // eigenvalue on the closed negative real axis
  Precondition,
  Overflow,
  SylvesterCollision,
  OutOfRange,
  MalformedInput,
  Refused,         // oracle declined (e.g. defective matrix)
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace matgamma
