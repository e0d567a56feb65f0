#pragma once

#include <iosfwd>

namespace gaussclone::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitVerification = 3;

/// Entry point of the `gaussclone` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaussclone::cli
