#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cflow/graph.hpp"
#include "cflow/point_sequence.hpp"
#include "cflow/types.hpp"

namespace cflow {

// Residual below which an assignment counts as conservative.
inline constexpr double conservation_tol = 1e-9;

// Complex edge values tied to a graph, one per edge index, read against each
// edge's reference orientation.  Values must be finite; exact zeros are
// representable but rejected by flow_number_estimate and flagged by
// verify_nzf.
class FlowAssignment {
 public:
  FlowAssignment(Graph graph, ComplexVector values);

  const Graph& graph() const { return graph_; }
  const ComplexVector& values() const { return values_; }
  RealVector norms() const { return values_.cwiseAbs(); }

 private:
  Graph graph_;
  ComplexVector values_;
};

// Largest vertex imbalance: max over vertices of |sum(in) - sum(out)|.
double conservation_residual(const FlowAssignment& flow);

// 1 + max|value| / min|value|: the least r this flow certifies once rescaled
// so its smallest norm is 1.  Requires a conservative (conservation_tol)
// assignment with no zero value.
double flow_number_estimate(const FlowAssignment& flow);

struct VerifyReport {
  double max_conservation_residual = 0.0;
  double min_norm = 0.0;
  double max_norm = 0.0;
  bool valid_for_r = false;
  std::vector<int> offending_vertices;  // residual above tol
  std::vector<int> offending_edges;     // norm outside [1-tol, r-1+tol]
};

// Checks whether the values are a nowhere-zero r-flow: conservation within
// tol at every vertex and every norm inside [1-tol, r-1+tol].  Violations
// are reported, never thrown.
VerifyReport verify_nzf(const FlowAssignment& flow, double r, double tol = 1e-9);

// Rotates every value by c (requires ||c|-1| <= 1e-12) and optionally flips
// the sign.  Both operations preserve validity.
FlowAssignment transform(const FlowAssignment& flow, Complex c, bool negate);

// Flow on wheel_graph(n) induced by a point sequence: spoke j carries the
// chord z_j, rim edge v_j -> v_{j+1} carries p_j.  Conservative for every
// sequence (the chords telescope at the hub).
FlowAssignment points_to_flow(const PointSequence& seq);

// Inverse of points_to_flow: extracts the rim values of a conservative flow
// whose graph is laid out exactly like wheel_graph(n).
PointSequence flow_to_points(const FlowAssignment& flow);

// Pushes a flow through a contraction from contract_complement: surviving
// edges keep their values, loops are dropped.  The result is conservative on
// `contracted` and its norm ratio never increases.
FlowAssignment project_contraction(const FlowAssignment& flow,
                                   const std::vector<int>& vertex_map,
                                   const Graph& contracted);

struct LoadedFlow {
  FlowAssignment flow;
  std::optional<double> r;
};

// Flow files: {"graph": {"vertex_count": n, "edges": [[tail,head],...]},
// "values": [[re,im],...]} plus an optional "r".  Doubles round-trip
// losslessly.
LoadedFlow read_flow_file(const std::string& path);
void write_flow_file(const std::string& path, const FlowAssignment& flow,
                     std::optional<double> r = std::nullopt);

}  // namespace cflow
