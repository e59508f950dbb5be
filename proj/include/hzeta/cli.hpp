#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or predicate failure
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hzeta::cli
