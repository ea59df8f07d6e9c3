#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyhlab::cli {

/// Exit codes: 0 success or acceptance, 1 failed check / rejection / failed
/// attack, 2 usage, parse, I/O or configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitError = 2;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyhlab::cli
