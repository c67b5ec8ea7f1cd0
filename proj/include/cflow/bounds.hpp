#pragma once

#include <optional>

#include "cflow/graph.hpp"
#include "cflow/solver.hpp"

namespace cflow {

// Lower bound on the flow number of every non-bipartite cubic bridgeless
// graph with odd girth g (odd g >= 3): contracting the complement of a
// shortest odd cycle maps its flows onto wheel flows, so the bound coincides
// with wheel_flow_number(g).
double odd_girth_bound(int g);

enum class LowerSource { odd_girth, trivial };
enum class UpperSource { closed_form, solver, none };

struct BoundReport {
  double lower = 2.0;
  LowerSource lower_source = LowerSource::trivial;
  std::optional<double> upper;
  UpperSource upper_source = UpperSource::none;
  bool bipartite = false;
  int odd_girth = 0;  // 0 when bipartite
};

// Bounds for a bridgeless graph (NoFlowError otherwise).  The odd-girth
// lower bound applies when the graph is cubic and non-bipartite; the trivial
// bound 2 is reported otherwise.  The upper bound comes from the closed
// forms when the graph is a wheel or prism up to edge order (relabelled
// isomorphic copies are not recognized), or from the numeric search when a
// SolverConfig is supplied.
BoundReport bound_report(const Graph& g);
BoundReport bound_report(const Graph& g, const SolverConfig& solve_cfg);

}  // namespace cflow
