#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diskpoly {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitDomainError = 3;
inline constexpr int kExitUnderdetermined = 4;
inline constexpr int kExitIoError = 5;

/// Runs one invocation; args exclude the program name. All output goes to the
/// provided streams so tests can drive the tool in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diskpoly
