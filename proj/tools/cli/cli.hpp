#pragma once

#include <ostream>

namespace hypergroup::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomain = 2;  ///< invalid input or a functional outside the admissible regime
inline constexpr int kResource = 3;
inline constexpr int kVerification = 4;

/// Parses argv and runs one subcommand. Results go to `out` unless -o names a
/// file; errors are written to `out` as JSON.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace hypergroup::cli
