#pragma once

#include <iosfwd>

namespace sclean::cli {

inline constexpr const char* kToolName = "sclean";
inline constexpr const char* kToolVersion = "1.0.0";

/// Exit status: 0 when nothing failed, 1 when a claim or check failed,
/// 2 on bad flags, ring/sigma specs or matrix literals.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sclean::cli
