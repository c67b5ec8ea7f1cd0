#include "cflow/cli.hpp"

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cflow/bounds.hpp"
#include "cflow/errors.hpp"
#include "cflow/flow.hpp"
#include "cflow/graph.hpp"
#include "cflow/render.hpp"
#include "cflow/solver.hpp"
#include "cflow/wheel.hpp"

namespace cflow {

namespace {

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

// Default solver seed, overridable by CFLOW_SEED; an explicit --seed wins.
std::uint64_t default_seed() {
  const char* s = std::getenv("CFLOW_SEED");
  if (s == nullptr || *s == '\0') return 1;
  if (*s == '-') throw std::invalid_argument("CFLOW_SEED must be non-negative");
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0')
    throw std::invalid_argument("CFLOW_SEED is not an unsigned integer");
  return v;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  f << text;
}

const char* lower_source_name(LowerSource s) {
  return s == LowerSource::odd_girth ? "odd-girth" : "trivial";
}

const char* upper_source_name(UpperSource s) {
  switch (s) {
    case UpperSource::closed_form:
      return "closed-form";
    case UpperSource::solver:
      return "solver";
    default:
      return "none";
  }
}

int run_wheel(int n, const std::string& json_out, const std::string& svg_out) {
  const double value = wheel_flow_number(n);
  std::cout << "phi_C(W_" << n << ") = " << fixed12(value) << "\n";
  if (!json_out.empty()) write_flow_file(json_out, optimal_flow(n), value);
  if (!svg_out.empty()) {
    const PointSequence seq =
        n % 2 == 0 ? even_wheel_sequence(n) : optimal_sequence(n);
    write_text_file(svg_out, render_sequence(seq, value - 1.0));
  }
  return 0;
}

int run_prism(int n, const std::string& json_out) {
  const double value = wheel_flow_number(n);
  std::cout << "phi_C(P_" << n << ") = " << fixed12(value) << "\n";
  if (!json_out.empty()) write_flow_file(json_out, prism_flow(n), value);
  return 0;
}

int run_bound(const std::string& graph_path, bool solve, const SolverConfig& cfg,
              const std::string& json_out) {
  const Graph g = read_graph_file(graph_path);
  const BoundReport rep = solve ? bound_report(g, cfg) : bound_report(g);

  std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";
  std::cout << "bipartite: " << (rep.bipartite ? "yes" : "no") << "\n";
  if (!rep.bipartite) std::cout << "odd girth: " << rep.odd_girth << "\n";
  std::cout << "lower bound: " << fixed12(rep.lower) << " ("
            << lower_source_name(rep.lower_source) << ")\n";
  if (rep.upper)
    std::cout << "upper bound: " << fixed12(*rep.upper) << " ("
              << upper_source_name(rep.upper_source) << ")\n";
  else
    std::cout << "upper bound: none\n";

  if (!json_out.empty()) {
    nlohmann::json j;
    j["lower"] = rep.lower;
    j["lower_source"] = lower_source_name(rep.lower_source);
    if (rep.upper)
      j["upper"] = *rep.upper;
    else
      j["upper"] = nullptr;
    j["upper_source"] = upper_source_name(rep.upper_source);
    j["bipartite"] = rep.bipartite;
    j["odd_girth"] = rep.odd_girth;
    write_text_file(json_out, j.dump(1) + "\n");
  }
  return 0;
}

int run_solve(const std::string& graph_path, const SolverConfig& cfg,
              const std::string& json_out) {
  const Graph g = read_graph_file(graph_path);
  const SolveResult res = solve_upper(g, cfg);
  const RealVector norms = res.witness.norms();
  std::cout << "upper bound: " << fixed12(res.upper_bound) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", conservation_residual(res.witness));
  std::cout << "residual: " << buf << "\n";
  std::cout << "min norm: " << fixed12(norms.minCoeff()) << "\n";
  std::cout << "max norm: " << fixed12(norms.maxCoeff()) << "\n";
  std::cout << "evaluations: " << res.iterations_used << " ("
            << res.starts_improved << " of " << cfg.starts << " starts improved)\n";
  if (!json_out.empty()) write_flow_file(json_out, res.witness, res.upper_bound);
  return 0;
}

int run_verify(const std::string& flow_path, std::optional<double> r_flag,
               double tol) {
  const LoadedFlow loaded = read_flow_file(flow_path);
  FlowAssignment flow = loaded.flow;

  double r = 0.0;
  if (r_flag) {
    r = *r_flag;
  } else if (loaded.r) {
    r = *loaded.r;
  } else {
    // No target given anywhere: test the values at their own best r, which
    // presumes the smallest norm is 1, so rescale first.
    double estimate = 0.0;
    try {
      estimate = flow_number_estimate(flow);
    } catch (const NotAFlowError& e) {
      std::cout << "invalid: " << e.what() << "\n";
      return 1;
    } catch (const NowhereZeroError& e) {
      std::cout << "invalid: " << e.what() << "\n";
      return 1;
    }
    const double lo = flow.norms().minCoeff();
    flow = FlowAssignment(flow.graph(), flow.values() / lo);
    std::cout << "no r given: testing values rescaled by 1/" << fixed12(lo)
              << " at their own estimate\n";
    r = estimate;
  }

  const VerifyReport rep = verify_nzf(flow, r, tol);
  std::cout << "r: " << fixed12(r) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", rep.max_conservation_residual);
  std::cout << "residual: " << buf << "\n";
  std::cout << "min norm: " << fixed12(rep.min_norm) << "\n";
  std::cout << "max norm: " << fixed12(rep.max_norm) << "\n";
  if (rep.valid_for_r) {
    std::cout << "valid nowhere-zero " << fixed12(r) << "-flow\n";
    return 0;
  }
  std::cout << "invalid: " << rep.offending_vertices.size()
            << " vertices violate conservation, " << rep.offending_edges.size()
            << " edge norms leave [1, r-1]\n";
  return 1;
}

int run_render(const std::string& input_path, const std::string& svg_out,
               std::optional<double> lambda_flag, const RenderSpec& spec) {
  // .pts.json files are a bare array, .flow.json files an object
  std::ifstream f(input_path);
  if (!f) throw ParseError("cannot open " + input_path);
  char first = '\0';
  f >> std::ws;
  f.get(first);
  f.close();

  PointSequence seq = first == '{' ? flow_to_points(read_flow_file(input_path).flow)
                                   : read_points_file(input_path);
  const double lambda = lambda_flag ? *lambda_flag : lambda_of(seq);
  const std::string svg = render_sequence(seq, lambda, spec);
  if (svg_out.empty())
    std::cout << svg;
  else
    write_text_file(svg_out, svg);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"complex nowhere-zero flows on wheels, prisms, and general graphs"};
  app.require_subcommand(1);

  int wheel_n = 0;
  std::string wheel_json, wheel_svg;
  CLI::App* wheel = app.add_subcommand("wheel", "optimal wheel flow and its value");
  wheel->add_option("--n", wheel_n, "number of rim vertices (>= 3)")->required();
  wheel->add_option("--json", wheel_json, "write the flow to this .flow.json file");
  wheel->add_option("--svg", wheel_svg, "write the point-sequence figure here");

  int prism_n = 0;
  std::string prism_json;
  CLI::App* prism = app.add_subcommand("prism", "optimal prism flow and its value");
  prism->add_option("--n", prism_n, "half the number of vertices (>= 3)")->required();
  prism->add_option("--json", prism_json, "write the flow to this .flow.json file");

  std::string bound_graph, bound_json;
  bool bound_solve = false;
  SolverConfig bound_cfg;
  bool bound_seed_set = false;
  CLI::App* bound = app.add_subcommand("bound", "lower/upper bounds for a graph");
  bound->add_option("graph", bound_graph, "input .graph file")->required();
  bound->add_flag("--solve", bound_solve, "run the numeric search for an upper bound");
  bound->add_option("--starts", bound_cfg.starts, "search starts");
  bound->add_option("--seed", bound_cfg.seed, "search seed")
      ->each([&](const std::string&) { bound_seed_set = true; });
  bound->add_option("--json", bound_json, "write the report fields here as JSON");

  std::string solve_graph, solve_json;
  SolverConfig solve_cfg;
  bool solve_seed_set = false;
  CLI::App* solve = app.add_subcommand("solve", "numeric upper bound for a graph");
  solve->add_option("graph", solve_graph, "input .graph file")->required();
  solve->add_option("--starts", solve_cfg.starts, "search starts");
  solve->add_option("--seed", solve_cfg.seed, "search seed")
      ->each([&](const std::string&) { solve_seed_set = true; });
  solve->add_option("--json", solve_json, "write the witness to this .flow.json file");

  std::string verify_flow;
  double verify_r = 0.0, verify_tol = 1e-9;
  bool verify_r_set = false;
  CLI::App* verify = app.add_subcommand("verify", "check a flow file");
  verify->add_option("flow", verify_flow, "input .flow.json file")->required();
  verify->add_option("--r", verify_r, "target r (default: the file's r)")
      ->each([&](const std::string&) { verify_r_set = true; });
  verify->add_option("--tol", verify_tol, "verification tolerance")
      ->capture_default_str();

  std::string render_input, render_svg;
  double render_lambda = 0.0;
  bool render_lambda_set = false;
  RenderSpec render_spec;
  bool no_labels = false, no_circles = false, no_arrows = false;
  CLI::App* render = app.add_subcommand("render", "draw a point sequence as SVG");
  render->add_option("input", render_input, ".pts.json or wheel .flow.json file")
      ->required();
  render->add_option("--svg", render_svg, "output file (default: stdout)");
  render->add_option("--scale", render_spec.scale, "pixels per unit")
      ->capture_default_str();
  render->add_option("--lambda", render_lambda, "outer circle radius")
      ->each([&](const std::string&) { render_lambda_set = true; });
  render->add_flag("--no-labels", no_labels, "omit the p_j labels");
  render->add_flag("--no-circles", no_circles, "omit the two circles");
  render->add_flag("--no-arrows", no_arrows, "omit the arrowheads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (wheel->parsed()) return run_wheel(wheel_n, wheel_json, wheel_svg);
    if (prism->parsed()) return run_prism(prism_n, prism_json);
    if (bound->parsed()) {
      if (!bound_seed_set) bound_cfg.seed = default_seed();
      return run_bound(bound_graph, bound_solve, bound_cfg, bound_json);
    }
    if (solve->parsed()) {
      if (!solve_seed_set) solve_cfg.seed = default_seed();
      return run_solve(solve_graph, solve_cfg, solve_json);
    }
    if (verify->parsed())
      return run_verify(verify_flow,
                        verify_r_set ? std::optional<double>(verify_r) : std::nullopt,
                        verify_tol);
    if (render->parsed()) {
      render_spec.show_labels = !no_labels;
      render_spec.show_circles = !no_circles;
      render_spec.arrowheads = !no_arrows;
      return run_render(render_input, render_svg,
                        render_lambda_set ? std::optional<double>(render_lambda)
                                          : std::nullopt,
                        render_spec);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cflow"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace cflow
