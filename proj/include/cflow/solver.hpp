#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cflow/flow.hpp"
#include "cflow/graph.hpp"
#include "cflow/point_sequence.hpp"
#include "cflow/types.hpp"

namespace cflow {

// Fundamental cycles of a spanning forest.  Generator k is a signed edge
// list (edge index, +-1): +1 where the cycle traverses the edge along its
// reference orientation.  The +-1 indicator of each generator is itself a
// conservative assignment, so any complex combination is too.
struct CycleBasis {
  Graph graph;
  std::vector<std::vector<std::pair<int, int>>> cycles;
  int size() const { return static_cast<int>(cycles.size()); }
};

CycleBasis cycle_basis(const Graph& g);

// Dense edge_count x size sign matrix of the basis.
RealMatrix basis_matrix(const CycleBasis& basis);

// The conservative assignment B * coeffs.
FlowAssignment circulation(const CycleBasis& basis, const ComplexVector& coeffs);

struct SolverConfig {
  int starts = 32;
  long long max_iters = 200000;  // objective evaluations allowed per start
  double step_init = 0.25;
  // Target resolution of the search; controls how far the internal smoothing
  // of the max/min objective is annealed before the exact polishing stage.
  double ratio_tol = 1e-3;
  std::uint64_t seed = 1;
};

struct SolveResult {
  double upper_bound = 0.0;   // 1 + max/min norm of the witness
  FlowAssignment witness;     // min norm rescaled to 1
  long long iterations_used = 0;  // objective evaluations over all starts
  int starts_improved = 0;        // starts that strictly improved the incumbent
};

// Upper-bounds the flow number by derivative-free descent over the cycle
// space: multi-start adaptive coordinate search on the real/imaginary
// coefficient pairs with step halving (stopping at step < 1e-10 or the
// evaluation budget), a smoothed max/min ratio annealed toward the exact one,
// and a degeneracy guard rejecting candidates with a norm below 1e-9.
// Start 0 is the all-ones coefficient vector; start s > 0 draws each
// coefficient from the annulus of radii [0.5, 1.5] using an RNG stream
// derived from (seed, s).  Deterministic given the config; ties between
// starts go to the lowest index.
SolveResult solve_upper(const Graph& g, const SolverConfig& cfg = {});

// max / min over all point and chord norms; +infinity when degenerate.
double wheel_ratio(const PointSequence& seq);

struct WheelSearchResult {
  PointSequence sequence;
  double ratio = 0.0;  // wheel_ratio of the sequence
  long long iterations_used = 0;
  int starts_improved = 0;
};

// Same search specialized to wheel sequences, descending over the move set
// {rotate_block, rotate_about, single-point radial scale and rotation}.
// Start 0 is the regular unit n-gon; further starts draw points from the
// annulus [0.5, 1.5].  1 + ratio of the result upper-bounds
// wheel_flow_number(n).
WheelSearchResult optimize_wheel_points(int n, const SolverConfig& cfg = {});

// Best exact-ratio improvement any single move achieves on `seq`, probing
// every rotate_block(h, k, +-t), rotate_about(h, k, +-t) and radial scale
// p_k *= 1 +- t for t in `thetas`.  <= 0 means no probed move helps.
double best_move_improvement(const PointSequence& seq,
                             const std::vector<double>& thetas);

}  // namespace cflow
