#include "cflow/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cflow/errors.hpp"

namespace cflow {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw std::invalid_argument("graph: negative vertex count");
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (e.tail == e.head) throw std::invalid_argument("graph: loops are not allowed");
  }
}

int Graph::degree(int v) const {
  if (v < 0 || v >= vertex_count_) throw std::invalid_argument("graph: vertex out of range");
  int d = 0;
  for (const Edge& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

std::vector<std::vector<std::pair<int, int>>> incidence_lists(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    inc[e.tail].emplace_back(k, e.head);
    inc[e.head].emplace_back(k, e.tail);
  }
  return inc;
}

Graph wheel_graph(int n) {
  if (n < 3) throw std::invalid_argument("wheel_graph: need n >= 3");
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) edges.push_back({n, j});            // spokes u -> v_j
  for (int j = 0; j < n; ++j) edges.push_back({j, (j + 1) % n});  // rim v_j -> v_{j+1}
  return Graph(n + 1, std::move(edges));
}

Graph prism_graph(int n) {
  if (n < 3) throw std::invalid_argument("prism_graph: need n >= 3");
  std::vector<Edge> edges;
  edges.reserve(3 * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) edges.push_back({j, (j + 1) % n});
  for (int j = 0; j < n; ++j) edges.push_back({n + j, n + (j + 1) % n});
  for (int j = 0; j < n; ++j) edges.push_back({j, n + j});
  return Graph(2 * n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
  return Graph(10, std::move(edges));
}

bool is_cubic(const Graph& g) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
}

bool is_bridgeless(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  const auto inc = incidence_lists(g);

  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  // depth-first search with low links, skipping only the edge index used to
  // enter a vertex so parallel edges are honored
  struct Frame {
    int v;
    int in_edge;
    std::size_t pos;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    if (fr.pos < inc[fr.v].size()) {
      const auto [k, w] = inc[fr.v][fr.pos++];
      if (k == fr.in_edge) continue;
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, k, 0});  // invalidates fr; re-taken next iteration
      } else {
        low[fr.v] = std::min(low[fr.v], disc[w]);
      }
    } else {
      const int v = fr.v;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[v]);
        if (low[v] > disc[parent.v]) return false;  // the entering edge is a bridge
      }
    }
  }
  return timer == n;  // disconnected graphs are not bridgeless
}

namespace {

// Breadth-first search on the parity double cover from s.  dist has 2n
// entries, vertex v at parity p stored at 2v+p; fills parent edge/vertex
// when track is non-null.
void parity_bfs(const std::vector<std::vector<std::pair<int, int>>>& inc, int s,
                std::vector<int>& dist, std::vector<std::pair<int, int>>* track) {
  std::fill(dist.begin(), dist.end(), -1);
  if (track) std::fill(track->begin(), track->end(), std::make_pair(-1, -1));
  std::deque<int> queue;
  dist[2 * s] = 0;
  queue.push_back(2 * s);
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const int v = cur / 2, p = cur % 2;
    for (const auto& [k, w] : inc[v]) {
      const int nxt = 2 * w + (1 - p);
      if (dist[nxt] < 0) {
        dist[nxt] = dist[cur] + 1;
        if (track) (*track)[nxt] = {cur, k};
        queue.push_back(nxt);
      }
    }
  }
}

}  // namespace

OddGirthResult odd_girth(const Graph& g) {
  const int n = g.vertex_count();
  const auto inc = incidence_lists(g);
  std::vector<int> dist(2 * static_cast<std::size_t>(n));

  // shortest odd closed walk through s = dist from s to its odd copy; the
  // global minimum over s is a simple cycle (a shorter odd closed walk would
  // split off one)
  int best = std::numeric_limits<int>::max(), best_src = -1;
  for (int s = 0; s < n; ++s) {
    parity_bfs(inc, s, dist, nullptr);
    const int d = dist[2 * s + 1];
    if (d >= 0 && d < best) {
      best = d;
      best_src = s;
    }
  }
  if (best_src < 0) return {true, 0, {}};

  std::vector<std::pair<int, int>> track(2 * static_cast<std::size_t>(n));
  parity_bfs(inc, best_src, dist, &track);
  std::vector<int> walk;
  for (int cur = 2 * best_src + 1; cur >= 0; cur = track[cur].first)
    walk.push_back(cur / 2);
  // walk runs odd-copy -> source and both ends are best_src; drop one
  walk.pop_back();
  std::vector<char> seen(n, 0);
  for (int v : walk) {
    if (seen[v]) throw std::logic_error("odd_girth: non-simple witness");
    seen[v] = 1;
  }
  return {false, best, std::move(walk)};
}

std::pair<Graph, std::vector<int>> contract_complement(const Graph& g,
                                                       const std::vector<int>& cycle) {
  const int n = g.vertex_count();
  const int c = static_cast<int>(cycle.size());
  if (c < 3) throw std::invalid_argument("contract_complement: cycle needs >= 3 vertices");
  if (c >= n) throw std::invalid_argument("contract_complement: nothing left to contract");

  std::vector<int> pos(n, -1);
  for (int i = 0; i < c; ++i) {
    const int v = cycle[i];
    if (v < 0 || v >= n) throw std::invalid_argument("contract_complement: vertex out of range");
    if (pos[v] != -1) throw std::invalid_argument("contract_complement: repeated cycle vertex");
    pos[v] = i;
  }

  // demand exactly one edge between cyclically consecutive vertices and none
  // between the others, i.e. the cycle is chordless and induced
  std::vector<int> rim_count(c, 0);
  for (const Edge& e : g.edges()) {
    const int i = pos[e.tail], j = pos[e.head];
    if (i < 0 || j < 0) continue;
    if ((i + 1) % c == j)
      ++rim_count[i];
    else if ((j + 1) % c == i)
      ++rim_count[j];
    else
      throw std::invalid_argument("contract_complement: cycle has a chord");
  }
  for (int i = 0; i < c; ++i) {
    if (rim_count[i] == 0)
      throw std::invalid_argument("contract_complement: given vertices are not a cycle");
    if (rim_count[i] > 1)
      throw std::invalid_argument("contract_complement: parallel edges on the cycle");
  }

  std::vector<int> map(n, c);
  for (int i = 0; i < c; ++i) map[cycle[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = map[e.tail], b = map[e.head];
    if (a == b) continue;  // loop inside the contracted blob
    edges.push_back({a, b});
  }
  return {Graph(c + 1, std::move(edges)), std::move(map)};
}

Graph read_graph(std::istream& in) {
  std::string line;
  long long want_v = -1, want_e = -1, seen = 0;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string rest;
    if (want_v < 0) {
      if (!(ls >> want_v >> want_e) || (ls >> rest))
        throw ParseError("graph line " + std::to_string(lineno) + ": malformed header");
      if (want_v < 0 || want_e < 0 || want_v > std::numeric_limits<int>::max() ||
          want_e > std::numeric_limits<int>::max())
        throw ParseError("graph line " + std::to_string(lineno) + ": counts out of range");
      edges.reserve(static_cast<std::size_t>(want_e));
    } else {
      if (seen == want_e)
        throw ParseError("graph line " + std::to_string(lineno) + ": more edges than declared");
      long long u = 0, v = 0;
      if (!(ls >> u >> v) || (ls >> rest))
        throw ParseError("graph line " + std::to_string(lineno) + ": malformed edge");
      if (u < 0 || v < 0 || u >= want_v || v >= want_v)
        throw ParseError("graph line " + std::to_string(lineno) + ": endpoint out of range");
      if (u == v) throw ParseError("graph line " + std::to_string(lineno) + ": loop edge");
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
      ++seen;
    }
  }
  if (want_v < 0) throw ParseError("graph: empty input");
  if (seen != want_e)
    throw ParseError("graph: declared " + std::to_string(want_e) + " edges, found " +
                     std::to_string(seen));
  return Graph(static_cast<int>(want_v), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_graph(f);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  write_graph(f, g);
}

}  // namespace cflow
