#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqfrob::cli {

/// Exit codes: 0 success, 1 a verification found a mismatch, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqfrob::cli
