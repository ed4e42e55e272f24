#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnkit::cli {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kReportSchema = "hnkit.report/1";

/// Process exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kError = 1, kInconclusive = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Thread count from HNKIT_THREADS, defaulting to 1.
unsigned threads_from_env();

/// FNV-1a 64-bit digest, hex encoded, used for the report's input digest.
std::string digest(const std::string& text);

}  // namespace hnkit::cli
