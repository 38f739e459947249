#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbilic::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 invalid route / intersecting audit /
/// lemma disagreement.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

/// Runs one command. args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbilic::cli
