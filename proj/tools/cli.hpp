#pragma once

#include <ostream>

namespace riskframe::cli {

/// Exit codes: 0 success, 1 usage error, 2 data or validation error,
/// 3 numerical failure.
enum ExitCode { Ok = 0, Usage = 1, DataError = 2, NumericalFailure = 3 };

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riskframe::cli
