#pragma once

#include "matgamma/error.hpp"

namespace matgamma::harness {

/// 0 ok, 1 internal, 2 malformed input, 3 pole, 4 no convergence,
/// 5 precondition (including a bound that is not evaluable under --strict).
int exit_code_for(ErrorCode code) noexcept;

int run_cli(int argc, char** argv);

}  // namespace matgamma::harness
