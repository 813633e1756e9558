#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::cli {

inline constexpr const char* version = "1.0.0";

// Seed used by every randomized command when --seed is omitted, and by the
// acceptance suite.
inline constexpr std::uint64_t release_seed = 20260101;

enum ExitStatus : int {
    ok = 0,
    verification_failed = 1,
    usage_or_input_error = 2,
};

// Runs one command line (args excludes the program name). Documents go to
// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace cayley::cli
