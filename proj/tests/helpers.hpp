#pragma once

// Shared test utilities: brute-force graph oracles that are independent of
// the library's algorithms, seeded random sequences, and small process-level
// helpers for exercising the CLI in-process.

#include <fcntl.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cflow/cli.hpp"
#include "cflow/graph.hpp"
#include "cflow/point_sequence.hpp"

namespace testutil {

// Length of a shortest odd cycle found by enumerating vertex subsets: a
// subset spans a simple cycle exactly when it induces a connected subgraph
// in which every member has degree 2. Exponential, so only for small graphs.
inline int exhaustive_odd_girth(const cflow::Graph& g) {
  const int n = g.vertex_count();
  const auto inc = cflow::incidence_lists(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 3 || size % 2 == 0) continue;
    if (best != 0 && size >= best) continue;
    std::vector<int> deg(n, 0);
    for (const cflow::Edge& e : g.edges())
      if ((mask >> e.tail & 1u) && (mask >> e.head & 1u)) {
        ++deg[e.tail];
        ++deg[e.head];
      }
    bool regular = true;
    int start = -1;
    for (int v = 0; v < n && regular; ++v) {
      if (!(mask >> v & 1u)) continue;
      regular = deg[v] == 2;
      start = v;
    }
    if (!regular) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [e, w] : inc[u])
        if ((mask >> w & 1u) && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached == size) best = size;
  }
  return best;
}

// Two-coloring oracle, independent of the double-cover machinery under test.
inline bool bfs_bipartite(const cflow::Graph& g) {
  const auto inc = cflow::incidence_lists(g);
  std::vector<int> color(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [e, w] : inc[u]) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// True when {a, b} appears in the edge list (either orientation).
inline bool has_edge(const cflow::Graph& g, int a, int b) {
  for (const cflow::Edge& e : g.edges())
    if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a)) return true;
  return false;
}

// A witness cycle must list distinct vertices that are consecutively
// adjacent, wrapping around.
inline bool valid_cycle_witness(const cflow::Graph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 3) return false;
  std::set<int> distinct(cyc.begin(), cyc.end());
  if (distinct.size() != cyc.size()) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!has_edge(g, cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

// Cycle graph C_n on vertices 0..n-1.
inline cflow::Graph cycle_graph(int n) {
  std::vector<cflow::Edge> edges;
  for (int j = 0; j < n; ++j) edges.push_back({j, (j + 1) % n});
  return cflow::Graph(n, edges);
}

// Complete graph on n vertices.
inline cflow::Graph complete_graph(int n) {
  std::vector<cflow::Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return cflow::Graph(n, edges);
}

// The 3-cube: vertices are bit masks, edges join masks differing in one bit.
inline cflow::Graph cube_graph() {
  std::vector<cflow::Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ (1 << bit))) edges.push_back({v, v ^ (1 << bit)});
  return cflow::Graph(8, edges);
}

// Generic point sequence: radii in [1, 1.4] and angular steps of magnitude
// in [0.15, 1.1] with random signs, so no chord degenerates and every
// interior angular gap stays clear of 0 and pi.
inline cflow::PointSequence random_sequence(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> radius(1.0, 1.4);
  std::uniform_real_distribution<double> step(0.15, 1.1);
  std::uniform_real_distribution<double> start(0.0, 6.2831853);
  cflow::ComplexVector pts(n);
  double angle = start(rng);
  for (int j = 0; j < n; ++j) {
    pts[j] = std::polar(radius(rng), angle);
    angle += (rng() & 1u ? 1.0 : -1.0) * step(rng);
  }
  return cflow::PointSequence(std::move(pts));
}

// Orientation of the angular step p_prev -> p: positive when anticlockwise.
inline double step_orientation(cflow::Complex prev, cflow::Complex p) {
  return std::imag(std::conj(prev) * p);
}

inline std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cflow_test_" + name)).string();
}

inline std::string read_text(const std::string& path) {
  std::ifstream f(path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the CLI entry point with stdout captured to a file; stderr is left
// alone so error text still reaches the test log.
inline CliResult run_cli(const std::vector<std::string>& args) {
  static int call = 0;
  const std::string path = temp_path("cli_out_" + std::to_string(call++) + ".txt");
  std::fflush(stdout);
  std::cout.flush();
  const int saved = ::dup(1);
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  ::dup2(fd, 1);
  ::close(fd);
  int code = -1;
  try {
    code = cflow::cli_main(args);
  } catch (...) {
    std::fflush(stdout);
    std::cout.flush();
    ::dup2(saved, 1);
    ::close(saved);
    throw;
  }
  std::fflush(stdout);
  std::cout.flush();
  ::dup2(saved, 1);
  ::close(saved);
  return {code, read_text(path)};
}

inline int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++count;
  return count;
}

}  // namespace testutil
