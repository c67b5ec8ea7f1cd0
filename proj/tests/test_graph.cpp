#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cflow/errors.hpp"
#include "cflow/graph.hpp"
#include "helpers.hpp"

using namespace cflow;
using namespace testutil;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg;
}

}  // namespace

TEST_CASE("wheel generator uses the documented vertex and edge layout") {
  const int n = 5;
  const Graph g = wheel_graph(n);
  CHECK(g.vertex_count() == n + 1);
  CHECK(g.edge_count() == 2 * n);
  for (int j = 0; j < n; ++j) {
    CHECK(g.edge(j) == Edge{n, j});                      // spoke j: hub -> v_j
    CHECK(g.edge(n + j) == Edge{j, (j + 1) % n});        // rim j: v_j -> v_{j+1}
  }
  const auto deg = degree_sequence(g);
  CHECK(deg[n] == n);
  for (int j = 0; j < n; ++j) CHECK(deg[j] == 3);
  CHECK(is_bridgeless(g));
  CHECK_THROWS_AS(wheel_graph(2), std::invalid_argument);
}

TEST_CASE("prism generator is cubic with outer, inner, and rung edges") {
  const int n = 4;
  const Graph g = prism_graph(n);
  CHECK(g.vertex_count() == 2 * n);
  CHECK(g.edge_count() == 3 * n);
  for (int j = 0; j < n; ++j) {
    CHECK(g.edge(j) == Edge{j, (j + 1) % n});
    CHECK(g.edge(n + j) == Edge{n + j, n + (j + 1) % n});
    CHECK(g.edge(2 * n + j) == Edge{j, n + j});
  }
  CHECK(is_cubic(g));
  CHECK(is_bridgeless(g));
  CHECK_THROWS_AS(prism_graph(2), std::invalid_argument);
}

TEST_CASE("petersen graph is the cubic bridgeless non-bipartite classic") {
  const Graph g = petersen_graph();
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
  CHECK(is_cubic(g));
  CHECK(is_bridgeless(g));
  CHECK(!bfs_bipartite(g));
}

TEST_CASE("odd girth matches subset enumeration on a battery of graphs") {
  std::vector<Graph> battery;
  for (int n = 3; n <= 9; ++n) battery.push_back(wheel_graph(n));
  for (int n = 3; n <= 8; ++n) battery.push_back(prism_graph(n));
  battery.push_back(petersen_graph());
  battery.push_back(cycle_graph(4));
  battery.push_back(cycle_graph(5));
  battery.push_back(cycle_graph(7));
  battery.push_back(complete_graph(4));
  battery.push_back(cube_graph());

  for (const Graph& g : battery) {
    CAPTURE(g.vertex_count());
    CAPTURE(g.edge_count());
    const OddGirthResult res = odd_girth(g);
    CHECK(res.bipartite == bfs_bipartite(g));
    CHECK(res.girth == exhaustive_odd_girth(g));
    if (res.bipartite) {
      CHECK(res.girth == 0);
      CHECK(res.cycle.empty());
    } else {
      CHECK(static_cast<int>(res.cycle.size()) == res.girth);
      CHECK(valid_cycle_witness(g, res.cycle));
    }
  }
}

TEST_CASE("contracting everything outside a cycle keeps the documented layout") {
  SUBCASE("petersen collapses onto a wheel over its shortest odd cycle") {
    const Graph g = petersen_graph();
    const OddGirthResult og = odd_girth(g);
    REQUIRE(og.girth == 5);
    const auto [h, map] = contract_complement(g, og.cycle);

    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 10);
    const auto deg = degree_sequence(h);
    CHECK(deg[5] == 5);  // the combined complement vertex becomes the hub
    for (int v = 0; v < 5; ++v) CHECK(deg[v] == 3);
    for (int v = 0; v < 5; ++v) {
      CHECK(has_edge(h, v, 5));
      CHECK(has_edge(h, v, (v + 1) % 5));  // cycle order is preserved
    }

    REQUIRE(map.size() == 10);
    for (int i = 0; i < 5; ++i) CHECK(map[og.cycle[i]] == i);
    for (int v = 0; v < 10; ++v)
      if (std::find(og.cycle.begin(), og.cycle.end(), v) == og.cycle.end())
        CHECK(map[v] == 5);
  }

  SUBCASE("contracting the lone hub of a wheel reproduces the wheel") {
    const Graph g = wheel_graph(5);
    const auto [h, map] = contract_complement(g, {0, 1, 2, 3, 4});
    CHECK(h == wheel_graph(5));
    CHECK(map == std::vector<int>{0, 1, 2, 3, 4, 5});
  }

  SUBCASE("rejects chords, repeats, non-cycles, and total contraction") {
    std::vector<Edge> hex;  // hexagon plus a chord, plus a spare vertex to keep
    for (int j = 0; j < 6; ++j) hex.push_back({j, (j + 1) % 6});
    hex.push_back({0, 3});
    hex.push_back({0, 6});
    const Graph braced(7, hex);
    CHECK_THROWS_AS(contract_complement(braced, {0, 1, 2, 3, 4, 5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(contract_complement(cycle_graph(5), {0, 1, 2, 3, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(contract_complement(wheel_graph(5), {0, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(contract_complement(wheel_graph(5), {0, 2, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(contract_complement(wheel_graph(5), {0, 1}),
                    std::invalid_argument);
  }
}

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{2, 2}}), std::invalid_argument);
  const Graph multi(2, {{0, 1}, {0, 1}});  // parallel edges are allowed
  CHECK(multi.edge_count() == 2);
}

TEST_CASE("bridge detection") {
  CHECK(!is_bridgeless(Graph(2, {{0, 1}})));
  // two triangles joined by a single edge: that edge is a bridge
  const Graph barbell(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  CHECK(!is_bridgeless(barbell));
  CHECK(is_bridgeless(cycle_graph(5)));
}

TEST_CASE("graph files round-trip and reject malformed input") {
  const std::string path = temp_path("roundtrip.graph");
  const Graph g = wheel_graph(7);
  write_graph_file(path, g);
  CHECK(read_graph_file(path) == g);

  SUBCASE("comments and blank lines are accepted") {
    std::ofstream f(temp_path("commented.graph"));
    f << "# triangle\n3 3\n\n0 1\n  # comment lines may be indented\n1 2\n2 0\n";
    f.close();
    CHECK(read_graph_file(temp_path("commented.graph")) == cycle_graph(3));
  }

  SUBCASE("parse failures carry ParseError") {
    auto reject = [](const std::string& name, const std::string& text) {
      const std::string p = temp_path(name);
      std::ofstream f(p);
      f << text;
      f.close();
      CAPTURE(text);
      CHECK_THROWS_AS(read_graph_file(p), ParseError);
    };
    CHECK_THROWS_AS(read_graph_file(temp_path("no_such.graph")), ParseError);
    reject("empty.graph", "");
    reject("header.graph", "x y\n");
    reject("negative.graph", "3 -1\n");
    reject("short.graph", "3 2\n0 1\n");
    reject("long.graph", "3 1\n0 1\n1 2\n");
    reject("loop.graph", "3 1\n0 0\n");
    reject("range.graph", "3 1\n0 7\n");
    reject("trailing.graph", "3 1\n0 1 9\n");
  }
}
