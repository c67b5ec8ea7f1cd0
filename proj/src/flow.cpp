#include "cflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "cflow/errors.hpp"

namespace cflow {

FlowAssignment::FlowAssignment(Graph graph, ComplexVector values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (values_.size() != graph_.edge_count())
    throw std::invalid_argument("flow: one value per edge required");
  for (Eigen::Index k = 0; k < values_.size(); ++k)
    if (!std::isfinite(values_[k].real()) || !std::isfinite(values_[k].imag()))
      throw std::invalid_argument("flow: non-finite value");
}

namespace {

ComplexVector vertex_net(const FlowAssignment& flow) {
  ComplexVector net = ComplexVector::Zero(flow.graph().vertex_count());
  for (int k = 0; k < flow.graph().edge_count(); ++k) {
    const Edge& e = flow.graph().edge(k);
    net[e.head] += flow.values()[k];
    net[e.tail] -= flow.values()[k];
  }
  return net;
}

}  // namespace

double conservation_residual(const FlowAssignment& flow) {
  if (flow.graph().vertex_count() == 0) return 0.0;
  return vertex_net(flow).cwiseAbs().maxCoeff();
}

double flow_number_estimate(const FlowAssignment& flow) {
  if (flow.graph().edge_count() == 0)
    throw std::invalid_argument("flow_number_estimate: graph has no edges");
  if (conservation_residual(flow) > conservation_tol)
    throw NotAFlowError("flow_number_estimate: conservation violated");
  const RealVector a = flow.norms();
  if ((a.array() == 0.0).any())
    throw NowhereZeroError("flow_number_estimate: zero value present");
  return 1.0 + a.maxCoeff() / a.minCoeff();
}

VerifyReport verify_nzf(const FlowAssignment& flow, double r, double tol) {
  if (!(r >= 2.0)) throw std::invalid_argument("verify_nzf: need r >= 2");
  if (!(tol >= 0.0)) throw std::invalid_argument("verify_nzf: need tol >= 0");
  VerifyReport rep;
  if (flow.graph().vertex_count() > 0) {
    const RealVector residuals = vertex_net(flow).cwiseAbs();
    rep.max_conservation_residual = residuals.maxCoeff();
    for (int v = 0; v < residuals.size(); ++v)
      if (residuals[v] > tol) rep.offending_vertices.push_back(v);
  }
  if (flow.graph().edge_count() > 0) {
    const RealVector a = flow.norms();
    rep.min_norm = a.minCoeff();
    rep.max_norm = a.maxCoeff();
    for (int k = 0; k < a.size(); ++k)
      if (a[k] < 1.0 - tol || a[k] > (r - 1.0) + tol) rep.offending_edges.push_back(k);
  }
  rep.valid_for_r = rep.offending_vertices.empty() && rep.offending_edges.empty();
  return rep;
}

FlowAssignment transform(const FlowAssignment& flow, Complex c, bool negate) {
  if (std::abs(std::abs(c) - 1.0) > 1e-12)
    throw std::invalid_argument("transform: rotation factor must have unit norm");
  if (negate) c = -c;
  return FlowAssignment(flow.graph(), flow.values() * c);
}

FlowAssignment points_to_flow(const PointSequence& seq) {
  const int n = seq.size();
  ComplexVector vals(2 * n);
  for (int j = 0; j < n; ++j) {
    vals[j] = seq.chord(j);       // spoke u -> v_j
    vals[n + j] = seq.point(j);   // rim v_j -> v_{j+1}
  }
  return FlowAssignment(wheel_graph(n), std::move(vals));
}

PointSequence flow_to_points(const FlowAssignment& flow) {
  const int n = flow.graph().vertex_count() - 1;
  if (n < 3 || !(flow.graph() == wheel_graph(n)))
    throw std::invalid_argument("flow_to_points: graph is not a wheel in canonical layout");
  return PointSequence(flow.values().segment(n, n));
}

FlowAssignment project_contraction(const FlowAssignment& flow,
                                   const std::vector<int>& vertex_map,
                                   const Graph& contracted) {
  const Graph& g = flow.graph();
  if (static_cast<int>(vertex_map.size()) != g.vertex_count())
    throw std::invalid_argument("project_contraction: map size mismatch");
  if (contracted.vertex_count() >= g.vertex_count() || contracted.vertex_count() <= 0)
    throw std::invalid_argument("project_contraction: not a proper contraction");
  for (int v : vertex_map)
    if (v < 0 || v >= contracted.vertex_count())
      throw std::invalid_argument("project_contraction: map image out of range");

  std::vector<Edge> mapped;
  std::vector<Complex> vals;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const int a = vertex_map[e.tail], b = vertex_map[e.head];
    if (a == b) continue;
    mapped.push_back({a, b});
    vals.push_back(flow.values()[k]);
  }
  if (mapped != contracted.edges())
    throw std::invalid_argument("project_contraction: contracted graph does not match the map");
  ComplexVector v(static_cast<Eigen::Index>(vals.size()));
  std::copy(vals.begin(), vals.end(), v.data());
  return FlowAssignment(contracted, std::move(v));
}

LoadedFlow read_flow_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("graph") || !j.contains("values"))
    throw ParseError(path + ": expected an object with \"graph\" and \"values\"");
  const auto& jg = j["graph"];
  if (!jg.is_object() || !jg.contains("vertex_count") || !jg.contains("edges") ||
      !jg["vertex_count"].is_number_integer() || !jg["edges"].is_array())
    throw ParseError(path + ": malformed \"graph\" object");
  std::vector<Edge> edges;
  for (const auto& je : jg["edges"]) {
    if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
        !je[1].is_number_integer())
      throw ParseError(path + ": edge entries must be [tail, head]");
    edges.push_back({je[0].get<int>(), je[1].get<int>()});
  }
  const auto& jv = j["values"];
  if (!jv.is_array()) throw ParseError(path + ": \"values\" must be an array");
  ComplexVector vals(static_cast<Eigen::Index>(jv.size()));
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const auto& entry = jv[i];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw ParseError(path + ": value " + std::to_string(i) + " is not [re, im]");
    vals[static_cast<Eigen::Index>(i)] = Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  std::optional<double> r;
  if (j.contains("r")) {
    if (!j["r"].is_number()) throw ParseError(path + ": \"r\" must be a number");
    r = j["r"].get<double>();
  }
  try {
    return {FlowAssignment(Graph(jg["vertex_count"].get<int>(), std::move(edges)),
                           std::move(vals)),
            r};
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_flow_file(const std::string& path, const FlowAssignment& flow,
                     std::optional<double> r) {
  nlohmann::json j;
  j["graph"]["vertex_count"] = flow.graph().vertex_count();
  auto& je = j["graph"]["edges"] = nlohmann::json::array();
  for (const Edge& e : flow.graph().edges()) je.push_back({e.tail, e.head});
  auto& jv = j["values"] = nlohmann::json::array();
  for (int k = 0; k < flow.graph().edge_count(); ++k)
    jv.push_back({flow.values()[k].real(), flow.values()[k].imag()});
  if (r) j["r"] = *r;
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  f << j.dump(1) << '\n';
}

}  // namespace cflow
