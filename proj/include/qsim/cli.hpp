#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsim::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_internal = 2;

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Data goes to `out`, diagnostics to `err`; returns one of
/// the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsim::cli
