#pragma once

#include <iosfwd>

namespace tvdlab {

// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVacuum = 3;
inline constexpr int kExitNumerical = 4;

/// Runs the driver as if invoked with argv; output goes to `out` unless
/// --output names a file, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tvdlab
