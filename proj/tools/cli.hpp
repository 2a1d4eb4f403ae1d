#pragma once

// Command-line front end: `markovseq <subcommand> [flags]`.
//
// Subcommands: seq, stern, verify {prop-main, theorem, equivalence, lemmas},
// spectrum, scan, bqf. Results go to `out`, diagnostics to `err`. With
// --json every record is one JSON object per line (schemas/cli-output.schema.json).
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 for usage or input errors.

#include <ostream>
#include <string>
#include <vector>

namespace markovseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the CLI on `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markovseq::cli
