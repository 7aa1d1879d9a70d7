#pragma once

#include <cstddef>
#include <iosfwd>

namespace gallai::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // infeasible / not Gallai / mismatch
inline constexpr int kExitUsage = 2;     // parse, guard, or I/O failure

// Above this many vertices, construct/generate need --allow-large.
inline constexpr std::size_t kMaxDefaultVertices = 4096;
// Crosscheck runs up to this n without --allow-large.
inline constexpr std::size_t kMaxDefaultCrosscheck = 5;

// Entry point for the `gallai` tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gallai::cli
