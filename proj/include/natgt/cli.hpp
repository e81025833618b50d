// The `natgt` command line: gen, encode, decode, simulate, verify.
#pragma once

#include <cstdint>
#include <iosfwd>

namespace natgt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFalse = 2,
  kWorkCapExceeded = 3,
};

inline constexpr std::uint64_t kDefaultWorkCap = 10'000'000;

/// Runs one command line; argv[0] is the program name. All output goes to
/// `out` and `err`, so tests can drive commands in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace natgt::cli
