#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmoment::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
/// Domain failure (non-PD matrix, conditioning, failed verification).
inline constexpr int kExitDomain = 1;
/// Usage, file or parse error.
inline constexpr int kExitUsage = 2;

/// Runs the CLI on `args` (program name excluded). JSON goes to `out`, human
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmoment::cli
