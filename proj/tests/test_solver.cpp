#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cflow/errors.hpp"
#include "cflow/flow.hpp"
#include "cflow/graph.hpp"
#include "cflow/solver.hpp"
#include "cflow/wheel.hpp"
#include "helpers.hpp"

using namespace cflow;
using namespace testutil;

TEST_CASE("cycle bases have dimension edges - vertices + components") {
  CHECK(cycle_basis(wheel_graph(6)).size() == 6);
  CHECK(cycle_basis(prism_graph(5)).size() == 6);
  CHECK(cycle_basis(petersen_graph()).size() == 6);
  CHECK(cycle_basis(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).size() == 0);
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(cycle_basis(two_triangles).size() == 2);
}

TEST_CASE("every basis cycle is a closed walk") {
  for (const Graph& g : {wheel_graph(7), prism_graph(6), petersen_graph()}) {
    CAPTURE(g.vertex_count());
    const CycleBasis basis = cycle_basis(g);
    for (int c = 0; c < basis.size(); ++c) {
      ComplexVector coeffs = ComplexVector::Zero(basis.size());
      coeffs[c] = Complex(1.0, 0.0);
      CHECK(conservation_residual(circulation(basis, coeffs)) <= 1e-12);
    }
    CHECK(conservation_residual(circulation(basis, ComplexVector::Ones(basis.size()))) <=
          1e-12);
  }
}

TEST_CASE("the basis matrix is the signed edge incidence of the cycles") {
  const Graph g = petersen_graph();
  const CycleBasis basis = cycle_basis(g);
  const RealMatrix b = basis_matrix(basis);
  REQUIRE(b.rows() == g.edge_count());
  REQUIRE(b.cols() == basis.size());
  for (int c = 0; c < basis.size(); ++c) {
    int support = 0;
    for (int e = 0; e < b.rows(); ++e) {
      CHECK((b(e, c) == 0.0 || b(e, c) == 1.0 || b(e, c) == -1.0));
      if (b(e, c) != 0.0) ++support;
    }
    CHECK(support == static_cast<int>(basis.cycles[c].size()));
  }
}

TEST_CASE("circulation validates the coefficient count") {
  const CycleBasis basis = cycle_basis(wheel_graph(5));
  CHECK_THROWS_AS(circulation(basis, ComplexVector::Ones(basis.size() + 1)),
                  std::invalid_argument);
}

TEST_CASE("the search is deterministic for a fixed seed") {
  SolverConfig cfg;
  cfg.starts = 4;
  cfg.max_iters = 20000;
  cfg.seed = 7;
  const Graph g = wheel_graph(5);
  const SolveResult a = solve_upper(g, cfg);
  const SolveResult b = solve_upper(g, cfg);
  CHECK(a.upper_bound == b.upper_bound);
  CHECK(a.iterations_used == b.iterations_used);
  CHECK(a.starts_improved == b.starts_improved);
  REQUIRE(a.witness.values().size() == b.witness.values().size());
  for (int k = 0; k < a.witness.values().size(); ++k)
    CHECK(a.witness.values()[k] == b.witness.values()[k]);
}

TEST_CASE("the witness certifies the reported upper bound") {
  SolverConfig cfg;
  cfg.starts = 6;
  cfg.max_iters = 40000;
  cfg.seed = 3;
  for (const Graph& g : {wheel_graph(5), prism_graph(4), petersen_graph()}) {
    CAPTURE(g.vertex_count());
    const SolveResult res = solve_upper(g, cfg);
    CHECK(res.upper_bound >= 2.0 - 1e-9);
    CHECK(res.iterations_used > 0);
    CHECK(res.starts_improved >= 1);

    // the witness itself must be a nowhere-zero flow at the reported value
    const FlowAssignment& w = res.witness;
    CHECK(conservation_residual(w) <= conservation_tol);
    CHECK(w.norms().minCoeff() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(flow_number_estimate(w) == doctest::Approx(res.upper_bound).epsilon(1e-9));
    CHECK(verify_nzf(w, res.upper_bound, 1e-6).valid_for_r);

    // the reported ratio is invariant under re-parameterizing the witness by
    // a global rotation and a positive scale
    const Complex c = std::polar(1.0, 0.83) * 2.75;
    const FlowAssignment scaled(w.graph(), w.values() * c);
    CHECK(std::abs(flow_number_estimate(scaled) - res.upper_bound) <= 1e-12);
  }
}

TEST_CASE("bridged graphs are rejected before the search starts") {
  SolverConfig cfg;
  cfg.starts = 1;
  cfg.max_iters = 2000;
  // a bridge lies on no cycle, so every circulation vanishes there
  CHECK_THROWS_AS(solve_upper(Graph(2, {{0, 1}}), cfg), NoFlowError);
  const Graph barbell(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  CHECK_THROWS_AS(solve_upper(barbell, cfg), NoFlowError);
}

TEST_CASE("solver configuration is validated") {
  const Graph g = wheel_graph(4);
  SolverConfig cfg;
  cfg.starts = 0;
  CHECK_THROWS_AS(solve_upper(g, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(solve_upper(g, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.step_init = 0.0;
  CHECK_THROWS_AS(solve_upper(g, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.ratio_tol = 0.0;
  CHECK_THROWS_AS(solve_upper(g, cfg), std::invalid_argument);
}

TEST_CASE("point search reaches the closed-form ratio on a small wheel") {
  SolverConfig cfg;
  cfg.starts = 8;
  cfg.max_iters = 40000;
  cfg.seed = 5;
  const WheelSearchResult res = optimize_wheel_points(5, cfg);
  CHECK(res.ratio <= (wheel_flow_number(5) - 1.0) + cfg.ratio_tol);
  REQUIRE(res.sequence.size() == 5);

  // reported ratio matches the sequence it returns, normalized to min norm 1
  double lo = 1e30, hi = 0.0;
  for (int j = 0; j < 5; ++j) {
    lo = std::min({lo, std::abs(res.sequence.point(j)), std::abs(res.sequence.chord(j))});
    hi = std::max({hi, std::abs(res.sequence.point(j)), std::abs(res.sequence.chord(j))});
  }
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.ratio == doctest::Approx(hi / lo).epsilon(1e-12));

  const WheelSearchResult again = optimize_wheel_points(5, cfg);
  CHECK(res.ratio == again.ratio);
  CHECK_THROWS_AS(optimize_wheel_points(2, cfg), std::invalid_argument);
}

TEST_CASE("no local move improves an optimal sequence") {
  const std::vector<double> thetas{1e-3, 1e-4, 1e-5};
  for (int n : {5, 7, 9, 11})
    CHECK(best_move_improvement(optimal_sequence(n), thetas) <= 1e-9);

  // a radially nudged point leaves an exploitable gap
  PointSequence seq = optimal_sequence(7);
  ComplexVector pts(7);
  for (int j = 0; j < 7; ++j) pts[j] = seq.point(j);
  pts[3] *= 1.02;
  CHECK(best_move_improvement(PointSequence(pts), thetas) > 1e-6);
}
