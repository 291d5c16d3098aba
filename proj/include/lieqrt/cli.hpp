#pragma once

#include <iosfwd>

namespace lieqrt {

/// Exit status: 0 ok, 1 usage, 2 invariant or margin violation,
/// 3 non-finite values.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitViolation = 2, kExitNonFinite = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieqrt
