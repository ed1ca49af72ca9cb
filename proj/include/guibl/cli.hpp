#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace guibl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConfig = 2;

// Runs one command. `args` excludes the program name. Machine output goes to
// `out` (or files), progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace guibl::cli
