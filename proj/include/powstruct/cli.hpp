#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powstruct {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain_error = 1;
inline constexpr int usage_error = 2;
inline constexpr int identity_failed = 3;
}  // namespace exit_code

/// Runs one CLI request. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powstruct
