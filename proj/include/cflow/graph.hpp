#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cflow {

// One edge of a multigraph, stored with a reference orientation tail -> head.
// A flow value is read against this orientation; traversing the edge the
// other way negates the value.
struct Edge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable multigraph on vertices 0..vertex_count()-1.  Parallel edges are
// allowed, loops are not.  Edge k keeps index k for the lifetime of the
// object; flow values and cycle bases refer to edges by this index.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int k) const { return edges_[static_cast<std::size_t>(k)]; }
  int degree(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Per-vertex incidence lists of (edge index, other endpoint) pairs.
std::vector<std::vector<std::pair<int, int>>> incidence_lists(const Graph& g);

// Wheel W_n: rim v_0..v_{n-1} plus hub u = n.  Edge k < n is the spoke
// u -> v_k; edge n+j is the rim edge v_j -> v_{(j+1) mod n}.  Every edge
// points "forward": into v_j from the hub, or along the rim orientation.
Graph wheel_graph(int n);

// Prism (circular ladder) on 2n vertices: outer cycle 0..n-1, inner cycle
// n..2n-1.  Edges are ordered outer cycle j -> j+1, inner cycle
// n+j -> n+(j+1), then the rungs j -> n+j.
Graph prism_graph(int n);

// The standard 10-vertex Petersen graph: outer 5-cycle 0..4, inner
// pentagram 5..9, rungs i -> 5+i.
Graph petersen_graph();

bool is_cubic(const Graph& g);

// Connected and free of cut edges.
bool is_bridgeless(const Graph& g);

struct OddGirthResult {
  bool bipartite = false;
  int girth = 0;           // length of a shortest odd cycle; 0 when bipartite
  std::vector<int> cycle;  // witness: girth distinct vertices, cyclically adjacent
};

// Exact shortest odd cycle length, found by breadth-first search on the
// parity double cover from every vertex.  The witness at the global minimum
// is always a simple cycle.
OddGirthResult odd_girth(const Graph& g);

// Contracts every vertex outside `cycle` into one new vertex (index
// cycle.size()), renumbering cycle[i] -> i.  Loop edges produced by the
// contraction are dropped, parallel edges are kept, and surviving edges keep
// their relative order.  `cycle` must be a chordless cycle of g and must not
// exhaust the vertex set.  Returns the contracted graph and the
// old-vertex -> new-vertex map.
std::pair<Graph, std::vector<int>> contract_complement(const Graph& g,
                                                       const std::vector<int>& cycle);

// Plain text format: first line "<vertex_count> <edge_count>", one
// "tail head" line per edge (0-based).  Lines whose first non-blank
// character is '#' are comments.  Parsing is strict: wrong counts, loops,
// out-of-range endpoints or trailing tokens raise ParseError.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace cflow
