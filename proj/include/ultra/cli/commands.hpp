#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ultra::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns 0 when every check passes, 1 on a
/// check failure, 2 on usage, parse or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultra::cli
