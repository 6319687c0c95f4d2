#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ndsolve::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_oracle_guard = 3;

/// Entry point behind the `ndsolve` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ndsolve::cli
