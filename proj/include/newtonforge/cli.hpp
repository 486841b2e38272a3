#pragma once

#include <iosfwd>

namespace newtonforge {

/// Entry point for the command-line tool. Returns the process exit code:
/// 0 on success, 1 on domain errors (poles, convergence regions, parse
/// failures of mathematical input), 2 on usage errors.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, bound to stdout/stderr.
int cli_run(int argc, const char* const* argv);

} // namespace newtonforge
