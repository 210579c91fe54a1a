#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seriesid {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 if any check
/// fails, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seriesid
