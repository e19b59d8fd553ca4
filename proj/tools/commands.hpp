#pragma once

namespace zhmat::cli {

/// Parses arguments, runs one subcommand and returns the process exit code:
/// 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
int run(int argc, char **argv);

} // namespace zhmat::cli
