#pragma once

#include <stdexcept>

namespace cflow {

// Malformed .graph / .flow.json / .pts.json input (or unreadable file).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conservation fails somewhere, so the edge values are not a flow.
struct NotAFlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An edge value is exactly zero.
struct NowhereZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A chord cannot be typed against the two admissible radii.
struct UnclassifiableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A closure equation admits no radius in the valid range.
struct InfeasibleConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The graph has a bridge or is disconnected: no nowhere-zero flow exists.
struct NoFlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every start of the numeric search collapsed onto a degenerate assignment.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cflow
