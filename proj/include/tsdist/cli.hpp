#pragma once

#include <iosfwd>

namespace tsdist {

/// Entry point behind the `tsdist` binary. Subcommands: run, distance,
/// grids, stats. Returns 0 on success, 2 on usage errors, 1 on runtime
/// failures. Data goes to `out` (stdout in the binary), diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tsdist
