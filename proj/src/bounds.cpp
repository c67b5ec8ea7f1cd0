#include "cflow/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cflow/errors.hpp"
#include "cflow/wheel.hpp"

namespace cflow {

namespace {

// Edge multiset with orientations and order forgotten.
std::vector<std::pair<int, int>> edge_fingerprint(const Graph& g) {
  std::vector<std::pair<int, int>> f;
  f.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges())
    f.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head));
  std::sort(f.begin(), f.end());
  return f;
}

bool same_edges(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() &&
         edge_fingerprint(a) == edge_fingerprint(b);
}

// Closed-form flow number when g is a wheel or prism on the standard vertex
// numbering; nothing otherwise.
std::optional<double> closed_form_upper(const Graph& g) {
  const int v = g.vertex_count(), m = g.edge_count();
  if (v >= 4 && m == 2 * (v - 1) && same_edges(g, wheel_graph(v - 1)))
    return wheel_flow_number(v - 1);
  if (v >= 6 && v % 2 == 0 && m == 3 * (v / 2) && same_edges(g, prism_graph(v / 2)))
    return wheel_flow_number(v / 2);
  return std::nullopt;
}

BoundReport report_impl(const Graph& g, const SolverConfig* solve_cfg) {
  if (!is_bridgeless(g))
    throw NoFlowError("bound_report: graph has a bridge or is disconnected");

  BoundReport rep;
  const OddGirthResult og = odd_girth(g);
  rep.bipartite = og.bipartite;
  rep.odd_girth = og.girth;
  if (!og.bipartite && is_cubic(g)) {
    rep.lower = odd_girth_bound(og.girth);
    rep.lower_source = LowerSource::odd_girth;
  }

  if (const auto closed = closed_form_upper(g)) {
    rep.upper = *closed;
    rep.upper_source = UpperSource::closed_form;
  } else if (solve_cfg != nullptr) {
    rep.upper = solve_upper(g, *solve_cfg).upper_bound;
    rep.upper_source = UpperSource::solver;
  }
  return rep;
}

}  // namespace

double odd_girth_bound(int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("odd_girth_bound: need odd g >= 3");
  return wheel_flow_number(g);
}

BoundReport bound_report(const Graph& g) { return report_impl(g, nullptr); }

BoundReport bound_report(const Graph& g, const SolverConfig& solve_cfg) {
  return report_impl(g, &solve_cfg);
}

}  // namespace cflow
