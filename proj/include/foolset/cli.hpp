#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace foolset::cli {

/// Exit codes: 0 success or pass, 1 verification failure or a "no" answer,
/// 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace foolset::cli
