#pragma once
// Entry point of the agingflow command-line driver. Kept separate from
// main() so tests can invoke the CLI in process.

namespace agingflow {

/// Parses argv and dispatches to the run/steady/ode/rates/preset
/// subcommands. Returns the process exit code: 0 success, 1 validation
/// or usage error, 2 numerical divergence, 3 a preset rate check failed.
int cli_main(int argc, const char* const* argv);

} // namespace agingflow
