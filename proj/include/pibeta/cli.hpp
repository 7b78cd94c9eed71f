#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pibeta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

inline constexpr long kDefaultMaxQ = 1000;

/// Upper limit on q: PIBETA_MAX_Q if set to a positive integer, else 1000.
/// Throws Error(usage) for a malformed value.
long max_q_from_environment();

/// Entry point of the `pibeta` tool. `args` holds the argument vector without
/// the program name. Artifact output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pibeta
