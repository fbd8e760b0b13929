#pragma once

#include <iosfwd>

namespace seatmatch::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_no = 1;       // infeasible, false, exhausted
inline constexpr int exit_unknown = 2;
inline constexpr int exit_usage = 64;

// Entry point of the seatmatch tool, with the streams made explicit for
// testing. Diagnostics controlled by SEATMATCH_LOG go to stderr.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seatmatch::cli
