#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sslat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). Machine-readable
/// output goes to `out`, human-readable text to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sslat::cli
