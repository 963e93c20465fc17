#ifndef PARKLC_CLI_HPP
#define PARKLC_CLI_HPP

#include <iosfwd>

namespace parklc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `parklc` binary; writes results to out and
// diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parklc

#endif  // PARKLC_CLI_HPP
