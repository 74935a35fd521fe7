#pragma once

#include <iosfwd>

namespace lfc::cli {

// Full argv-level entry point, separated from main() so tests can drive the
// tool in-process. Returns the process exit code: 0 all checks hold, 1 a
// violation was found, 2 input error. Writes reports to `out` and
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfc::cli
