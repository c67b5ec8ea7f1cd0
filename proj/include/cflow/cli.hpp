#pragma once

#include <string>
#include <vector>

namespace cflow {

// Entry point of the `cflow` tool (subcommands wheel, prism, bound, solve,
// verify, render).  Exit codes: 0 success, 1 domain failure (invalid flow,
// bridged graph, solver collapse), 2 usage or file/parse errors.  The
// environment variable CFLOW_SEED overrides the default solver seed.
int cli_main(int argc, const char* const* argv);

// Convenience overload: args without the program name.
int cli_main(const std::vector<std::string>& args);

}  // namespace cflow
