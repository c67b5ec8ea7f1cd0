#include "cflow/solver.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cflow/errors.hpp"
#include "cflow/wheel.hpp"

namespace cflow {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double degenerate_norm = 1e-9;   // below this a candidate is rejected
constexpr double step_floor_exact = 1e-10;
constexpr double step_floor_smooth = 1e-8;
// exploration runs with a coarse exact stage; only the final polish of a
// start's incumbent descends to full depth
constexpr double step_floor_kick = 3e-5;
constexpr std::uint64_t stream_stride = 0x9e3779b97f4a7c15ull;

// short re-descent schedule after a small kick
const std::vector<double> kick_mus{0.01, 0.002, 0.0};
// (winding, reversed steps) pairs the structured kicks land on, in the order
// they are tried
constexpr std::pair<int, int> spin_variants[] = {{1, 0}, {1, 1}, {1, 2},
                                                 {2, 0}, {2, 1}, {3, 0}};

// Uniform doubles in [0, 1) built from the top 53 bits of mt19937_64, so the
// stream does not depend on the library's distribution implementation.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : eng_(seed) {}
  double next() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  Complex annulus_point() {
    const double r = 0.5 + next();
    const double a = 2.0 * std::numbers::pi * next();
    return std::polar(r, a);
  }

 private:
  std::mt19937_64 eng_;
};

// max/min of the entries, smoothed by log-sum-exp when mu > 0.  Normalizing
// by the smallest entry first keeps the smoothed value scale-invariant, so
// descent cannot cheat by inflating the whole vector.
double ratio_objective(const RealVector& norms, double mu) {
  const double lo = norms.minCoeff();
  if (!(lo >= degenerate_norm)) return inf;
  const double hi = norms.maxCoeff();
  if (mu <= 0.0) return hi / lo;
  const double top = hi / lo;
  double se = 0.0, sm = 0.0;
  for (int i = 0; i < norms.size(); ++i) {
    const double y = norms[i] / lo;
    se += std::exp((y - top) / mu);
    sm += std::exp(-(y - 1.0) / mu);
  }
  const double soft_max = top + mu * std::log(se);
  const double soft_min = 1.0 - mu * std::log(sm);
  return soft_max / soft_min;
}

// Smoothing schedule: anneal toward the resolution the caller asked for,
// then finish on the exact objective (mu = 0).
std::vector<double> smoothing_stages(double ratio_tol) {
  std::vector<double> mus;
  for (double mu = 0.05; mu > ratio_tol / 4.0; mu /= 5.0) mus.push_back(mu);
  mus.push_back(0.0);
  return mus;
}

void check_config(const SolverConfig& cfg) {
  if (cfg.starts < 1) throw std::invalid_argument("solver: need starts >= 1");
  if (cfg.max_iters < 1) throw std::invalid_argument("solver: need max_iters >= 1");
  if (!(cfg.step_init > 0.0) || !std::isfinite(cfg.step_init))
    throw std::invalid_argument("solver: need finite step_init > 0");
  if (!(cfg.ratio_tol > 0.0)) throw std::invalid_argument("solver: need ratio_tol > 0");
}

RealVector all_norms(const PointSequence& seq) {
  const RealVector pn = point_norms(seq);
  const RealVector cn = chord_norms(seq);
  RealVector out(pn.size() + cn.size());
  out << pn, cn;
  return out;
}

// One move of the wheel search; `t` is supplied at application time.
struct WheelMove {
  enum Kind { block, about, scale, turn } kind;
  int h;
  int k;  // unused for scale and turn
};

PointSequence apply_move(const PointSequence& seq, const WheelMove& mv, double t) {
  switch (mv.kind) {
    case WheelMove::block:
      return rotate_block(seq, mv.h, mv.k, t);
    case WheelMove::about:
      return rotate_about(seq, mv.h, mv.k, t);
    case WheelMove::scale: {
      ComplexVector p = seq.points();
      p[mv.h] *= 1.0 + t;
      return PointSequence(std::move(p));
    }
    default: {  // turn: rotate one point about the origin
      ComplexVector p = seq.points();
      p[mv.h] *= std::polar(1.0, t);
      return PointSequence(std::move(p));
    }
  }
}

std::vector<WheelMove> wheel_moves(int n) {
  std::vector<WheelMove> moves;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      if (h != k) moves.push_back({WheelMove::block, h, k});
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      if (h != k) moves.push_back({WheelMove::about, h, k});
  for (int h = 0; h < n; ++h) moves.push_back({WheelMove::scale, h, -1});
  for (int h = 0; h < n; ++h) moves.push_back({WheelMove::turn, h, -1});
  return moves;
}

// The coherent landing for a structured kick: unit points whose consecutive
// angular gaps are -delta for the first q steps and +delta after, closing
// after `winding` turns.  These are exactly the gap-sign classes that descent
// cannot reach on its own (crossing one pinches a chord norm through zero).
PointSequence spin_sequence(int n, int winding, int defects) {
  const int q = n - 2 * defects < 1 ? 0 : defects;
  const double delta =
      2.0 * std::numbers::pi * winding / static_cast<double>(n - 2 * q);
  ComplexVector p(n);
  double phase = 0.0;
  for (int j = 0; j < n; ++j) {
    p[j] = std::polar(1.0, phase);
    phase += j < q ? -delta : delta;
  }
  return PointSequence(std::move(p));
}

}  // namespace

namespace {

// One long simple cycle per root, as (edge, direction) steps: depth-first
// search tends to run deep before closing, so the fundamental cycle of the
// deepest back edge is usually long.  Used by solve_upper's structured kicks.
std::vector<std::vector<std::pair<int, int>>> long_cycle_catalog(const Graph& g) {
  const int n = g.vertex_count();
  const auto inc = incidence_lists(g);
  std::vector<std::vector<std::pair<int, int>>> catalog;
  for (int root = 0; root < n && root < 8; ++root) {
    std::vector<int> parent_vertex(n, -1), parent_edge(n, -1), depth(n, -1);
    std::vector<std::size_t> pos(n, 0);
    std::vector<int> stack{root};
    depth[root] = 0;
    int best_u = -1, best_e = -1, best_len = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      if (pos[u] == inc[u].size()) {
        stack.pop_back();
        continue;
      }
      const auto [e, w] = inc[u][pos[u]++];
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        parent_vertex[w] = u;
        parent_edge[w] = e;
        stack.push_back(w);
      } else if (e != parent_edge[u] && depth[u] - depth[w] + 1 > best_len) {
        best_len = depth[u] - depth[w] + 1;
        best_u = u;
        best_e = e;
      }
    }
    if (best_len < 3) continue;
    // walk the tree path best_u -> ancestor, then close with the back edge
    std::vector<std::pair<int, int>> cycle;
    const int stop = g.edge(best_e).tail == best_u ? g.edge(best_e).head
                                                   : g.edge(best_e).tail;
    for (int x = best_u; x != stop; x = parent_vertex[x]) {
      const int e = parent_edge[x];
      cycle.emplace_back(e, g.edge(e).head == x ? 1 : -1);
    }
    std::reverse(cycle.begin(), cycle.end());
    cycle.emplace_back(best_e, g.edge(best_e).tail == best_u ? 1 : -1);

    // Also shortcut the cycle across chords until none remain.  Both arcs of
    // every chord are candidates; the longest wins, ties broken by the fewest
    // chords left inside.  The tie-break matters: a detour through a hub ties
    // on length with the detour-free rim, but keeps every spoke as a chord
    // and would be whittled down to a triangle.
    const auto chords_inside = [&](const std::vector<int>& cyc) {
      const int len = static_cast<int>(cyc.size());
      std::vector<int> pos(n, -1);
      for (int i = 0; i < len; ++i) pos[cyc[static_cast<std::size_t>(i)]] = i;
      int count = 0;
      for (int e = 0; e < g.edge_count(); ++e) {
        const int a = pos[g.edge(e).tail], bb = pos[g.edge(e).head];
        if (a < 0 || bb < 0 || a == bb) continue;
        const int fw = (bb - a + len) % len;
        if (fw != 1 && fw != len - 1) ++count;
      }
      return count;
    };
    std::vector<int> vl;
    vl.reserve(cycle.size());
    for (const auto& [e, dir] : cycle)
      vl.push_back(dir == 1 ? g.edge(e).tail : g.edge(e).head);
    while (chords_inside(vl) > 0) {
      const int len = static_cast<int>(vl.size());
      std::vector<int> pos(n, -1);
      for (int i = 0; i < len; ++i) pos[vl[static_cast<std::size_t>(i)]] = i;
      std::vector<int> best;
      int best_chords = 0;
      for (int e = 0; e < g.edge_count(); ++e) {
        const int a = pos[g.edge(e).tail], bb = pos[g.edge(e).head];
        if (a < 0 || bb < 0 || a == bb) continue;
        const int fw = (bb - a + len) % len;
        if (fw == 1 || fw == len - 1) continue;
        for (const auto& [from, span] :
             {std::pair{a, fw}, std::pair{bb, len - fw}}) {
          if (span + 1 < 3) continue;
          std::vector<int> arc;
          arc.reserve(static_cast<std::size_t>(span) + 1);
          for (int i = 0; i <= span; ++i)
            arc.push_back(vl[static_cast<std::size_t>((from + i) % len)]);
          const int arc_chords = chords_inside(arc);
          if (arc.size() > best.size() ||
              (arc.size() == best.size() && arc_chords < best_chords)) {
            best = std::move(arc);
            best_chords = arc_chords;
          }
        }
      }
      vl = std::move(best);  // the winning chord closes vl.back() to vl.front()
    }
    std::vector<std::pair<int, int>> chordless;
    if (vl.size() >= 3 && vl.size() != cycle.size()) {
      for (std::size_t i = 0; i < vl.size(); ++i) {
        const int a = vl[i], bb = vl[(i + 1) % vl.size()];
        for (int e = 0; e < g.edge_count(); ++e) {
          if (g.edge(e).tail == a && g.edge(e).head == bb) {
            chordless.emplace_back(e, 1);
            break;
          }
          if (g.edge(e).tail == bb && g.edge(e).head == a) {
            chordless.emplace_back(e, -1);
            break;
          }
        }
      }
    }

    const auto fresh = [&](std::size_t len) {
      for (const auto& c : catalog)
        if (c.size() == len) return false;
      return true;
    };
    if (chordless.size() == vl.size() && chordless.size() >= 3 &&
        fresh(chordless.size()))
      catalog.push_back(std::move(chordless));
    if (fresh(cycle.size())) catalog.push_back(std::move(cycle));
    if (catalog.size() >= 2) break;
  }
  if (catalog.size() > 2) catalog.resize(2);
  return catalog;
}

}  // namespace

CycleBasis cycle_basis(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto inc = incidence_lists(g);
  std::vector<int> parent_vertex(n, -1), parent_edge(n, -1), depth(n, 0);
  std::vector<char> visited(n, 0), in_tree(m, 0);

  for (int root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (const auto& [e, w] : inc[u]) {
        if (visited[w]) continue;
        visited[w] = 1;
        parent_vertex[w] = u;
        parent_edge[w] = e;
        depth[w] = depth[u] + 1;
        in_tree[e] = 1;
        frontier.push(w);
      }
    }
  }

  // one step up the forest, signed against the edge's reference orientation
  const auto ascend = [&](int x) {
    const int e = parent_edge[x];
    const int sign = g.edge(e).tail == x ? 1 : -1;
    return std::make_pair(std::make_pair(e, sign), parent_vertex[x]);
  };

  CycleBasis basis;
  basis.graph = g;
  for (int e = 0; e < m; ++e) {
    if (in_tree[e]) continue;
    // traverse e tail -> head, then the tree path head -> tail
    std::vector<std::pair<int, int>> cycle{{e, 1}};
    std::vector<std::pair<int, int>> tail_side;
    int a = g.edge(e).head, b = g.edge(e).tail;
    while (depth[a] > depth[b]) {
      auto [se, p] = ascend(a);
      cycle.push_back(se);
      a = p;
    }
    while (depth[b] > depth[a]) {
      auto [se, p] = ascend(b);
      tail_side.push_back(se);
      b = p;
    }
    while (a != b) {
      auto [sa, pa] = ascend(a);
      cycle.push_back(sa);
      a = pa;
      auto [sb, pb] = ascend(b);
      tail_side.push_back(sb);
      b = pb;
    }
    // the tail side was walked against the cycle direction
    for (auto it = tail_side.rbegin(); it != tail_side.rend(); ++it)
      cycle.emplace_back(it->first, -it->second);
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

RealMatrix basis_matrix(const CycleBasis& basis) {
  RealMatrix b = RealMatrix::Zero(basis.graph.edge_count(), basis.size());
  for (int k = 0; k < basis.size(); ++k)
    for (const auto& [e, sign] : basis.cycles[static_cast<std::size_t>(k)])
      b(e, k) = sign;
  return b;
}

FlowAssignment circulation(const CycleBasis& basis, const ComplexVector& coeffs) {
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("circulation: one coefficient per basis cycle");
  const RealMatrix b = basis_matrix(basis);
  ComplexVector vals(basis.graph.edge_count());
  vals.real() = b * coeffs.real().eval();
  vals.imag() = b * coeffs.imag().eval();
  return FlowAssignment(basis.graph, std::move(vals));
}

SolveResult solve_upper(const Graph& g, const SolverConfig& cfg) {
  check_config(cfg);
  if (g.edge_count() == 0) throw std::invalid_argument("solve_upper: graph has no edges");
  if (!is_bridgeless(g))
    throw NoFlowError("solve_upper: graph has a bridge or is disconnected");

  const CycleBasis basis = cycle_basis(g);
  const int d = basis.size();
  const RealMatrix b = basis_matrix(basis);
  const std::vector<double> mus = smoothing_stages(cfg.ratio_tol);

  // long simple cycles for the cycle-spin kick
  const auto spins = long_cycle_catalog(g);

  long long total_used = 0;
  int starts_improved = 0;
  double best_ratio = inf;
  RealVector best_re, best_im;

  RealVector re(d), im(d), vre(g.edge_count()), vim(g.edge_count()),
      norms(g.edge_count());
  for (int s = 0; s < cfg.starts; ++s) {
    Uniform rng(cfg.seed + stream_stride * static_cast<std::uint64_t>(s));
    if (s == 0) {
      re.setOnes();
      im.setZero();
    } else {
      for (int k = 0; k < d; ++k) {
        const Complex c = rng.annulus_point();
        re[k] = c.real();
        im[k] = c.imag();
      }
    }

    long long used = 0;
    double start_best = inf;
    RealVector start_re = re, start_im = im;
    // every objective below goes through this: it refreshes `norms` from the
    // current coefficients and keeps the best exact ratio ever seen
    const auto touch = [&]() {
      ++used;
      vre.noalias() = b * re;
      vim.noalias() = b * im;
      norms = (vre.array().square() + vim.array().square()).sqrt().matrix();
      const double exact = ratio_objective(norms, 0.0);
      if (exact < start_best) {
        start_best = exact;
        start_re = re;
        start_im = im;
      }
    };

    // One sweep probes +-step on every axis, then a relative radial scale and
    // a rotation of every coefficient pair.  The pair moves let the search
    // walk along the objective's rotational valleys instead of zigzagging
    // across them.
    const auto sweep_descend = [&](const std::function<double()>& obj,
                                   double init, double floor) {
      double step = init;
      if (used >= cfg.max_iters) return;
      double cur = obj();
      while (step >= floor && used < cfg.max_iters) {
        bool improved = false;
        // an accepted probe is repeated while it keeps paying, so walking a
        // long valley costs one evaluation per stride instead of a full sweep
        for (int i = 0; i < 2 * d && used < cfg.max_iters; ++i) {
          double& coord = (i % 2 == 0) ? re[i / 2] : im[i / 2];
          for (const double delta : {step, -step}) {
            coord += delta;
            const double val = obj();
            if (val < cur) {
              cur = val;
              improved = true;
              while (used < cfg.max_iters) {
                coord += delta;
                const double again = obj();
                if (again < cur) {
                  cur = again;
                } else {
                  coord -= delta;
                  break;
                }
              }
              break;
            }
            coord -= delta;
          }
        }
        for (int k = 0; k < d && used < cfg.max_iters; ++k) {
          const Complex factors[4] = {Complex(1.0 + step, 0.0),
                                      Complex(1.0 - step, 0.0),
                                      std::polar(1.0, step),
                                      std::polar(1.0, -step)};
          for (const Complex& f : factors) {
            const Complex c(re[k], im[k]);
            const Complex p = c * f;
            re[k] = p.real();
            im[k] = p.imag();
            const double val = obj();
            if (val < cur) {
              cur = val;
              improved = true;
              while (used < cfg.max_iters) {
                const Complex c2(re[k], im[k]);
                const Complex p2 = c2 * f;
                re[k] = p2.real();
                im[k] = p2.imag();
                const double again = obj();
                if (again < cur) {
                  cur = again;
                } else {
                  re[k] = c2.real();
                  im[k] = c2.imag();
                  break;
                }
              }
              break;
            }
            re[k] = c.real();
            im[k] = c.imag();
          }
        }
        if (!improved) step *= 0.5;
      }
    };

    // The ratio cannot descend across a change of the circulation's sign
    // pattern or winding: closing an angular gap pinches an edge norm to
    // zero, so every such path climbs.  This smooth stand-in for "all norms
    // equal" has no such walls; descending it first carries the start (or a
    // kicked incumbent) into a coherent near-balanced configuration, and the
    // ratio stages only ever polish within that class.
    const auto balance = [&]() {
      sweep_descend(
          [&]() {
            touch();
            return (norms.array().square() - 1.0).square().sum();
          },
          cfg.step_init, 1e-6);
    };

    // Each smoothing stage only needs steps around its own resolution: finer
    // structure is invisible under the smoothing, so descending far below mu
    // (or restarting the halving from the top every stage) just burns budget.
    // The exact stage's floor is the caller's choice: coarse while exploring
    // classes, full depth only for the final polish.
    const auto descend = [&](const std::vector<double>& stage_mus,
                             double exact_floor) {
      for (const double mu : stage_mus)
        sweep_descend(
            [&]() {
              touch();
              return ratio_objective(norms, mu);
            },
            mu > 0.0 ? std::min(cfg.step_init, 8.0 * mu) : 0.02,
            mu > 0.0 ? std::max(mu / 4.0, step_floor_smooth) : exact_floor);
    };

    const long long polish_reserve =
        std::max<long long>(2000, cfg.max_iters / 20);

    balance();
    descend(mus, step_floor_kick);

    // Basin hopping on the remaining budget: perturb the incumbent, re-descend,
    // keep whatever improves.  Downhill moves cannot change the sign pattern
    // or winding of the circulation (closing an angular gap pinches an edge
    // norm, so every such path climbs), which strands descent in whatever
    // combinatorial class it started in.  The cycle spins address that head
    // on: each projects a unimodular phase progression around a long cycle of
    // the graph onto the cycle space, with winding w and q reversed steps, so
    // descent starts inside a chosen coherent class.  Random starts would hit
    // such a class only with probability on the order of 2^-edges.  The spins
    // run first; leftover budget goes to jiggles (same-class polish) and
    // scrambles (near-restarts).
    const int spin_total =
        static_cast<int>(spins.size() * std::size(spin_variants));
    for (int kick = 0; used + polish_reserve < cfg.max_iters; ++kick) {
      re = start_re;
      im = start_im;
      if (kick < spin_total) {
        // Cycle spin.  Only the cycle's own rows of the basis matrix are fit:
        // prescribing values off the cycle as well would drag the projection
        // out of the intended class (the flow the cycle induces on the rest
        // of the graph is whatever conservation demands, not zero).
        const auto& cyc = spins[static_cast<std::size_t>(kick) % spins.size()];
        const auto [winding, defects] =
            spin_variants[static_cast<std::size_t>(kick) / spins.size()];
        const int len = static_cast<int>(cyc.size());
        const int q = len - 2 * defects < 1 ? 0 : defects;
        const double delta =
            2.0 * std::numbers::pi * winding / static_cast<double>(len - 2 * q);
        RealMatrix bc(len, d);
        RealVector tre(len), tim(len);
        double phase = 0.0;
        for (int p = 0; p < len; ++p) {
          const auto [e, dir] = cyc[static_cast<std::size_t>(p)];
          bc.row(p) = b.row(e);
          tre[p] = dir * std::cos(phase);
          tim[p] = dir * std::sin(phase);
          phase += p < q ? -delta : delta;
        }
        const Eigen::ColPivHouseholderQR<RealMatrix> fit(bc);
        re = fit.solve(tre);
        im = fit.solve(tim);
        descend(mus, step_floor_kick);
      } else if ((kick - spin_total) % 3 == 1) {  // scramble, a near-restart
        for (int k = 0; k < d; ++k) {
          const Complex c = Complex(re[k], im[k]) *
                            std::polar(1.0 + 0.3 * (2.0 * rng.next() - 1.0),
                                       1.6 * (2.0 * rng.next() - 1.0));
          re[k] = c.real();
          im[k] = c.imag();
        }
        balance();
        descend(mus, step_floor_kick);
      } else {  // jiggle, mild then stronger
        const double a = (kick - spin_total) % 3 == 0 ? 0.15 : 0.5;
        for (int k = 0; k < d; ++k) {
          const Complex c = Complex(re[k], im[k]) *
                            std::polar(1.0 + 0.3 * (2.0 * rng.next() - 1.0),
                                       a * (2.0 * rng.next() - 1.0));
          re[k] = c.real();
          im[k] = c.imag();
        }
        descend(kick_mus, step_floor_kick);
      }
    }
    re = start_re;
    im = start_im;
    descend({0.0}, step_floor_exact);
    re = start_re;
    im = start_im;

    total_used += used;
    if (start_best < best_ratio) {
      best_ratio = start_best;
      best_re = start_re;
      best_im = start_im;
      ++starts_improved;
    }
  }

  if (!std::isfinite(best_ratio))
    throw SolverError("solve_upper: every start stayed degenerate");

  ComplexVector coeffs(d);
  coeffs.real() = best_re;
  coeffs.imag() = best_im;
  const FlowAssignment raw = circulation(basis, coeffs);
  FlowAssignment witness(raw.graph(), raw.values() / raw.norms().minCoeff());
  return SolveResult{flow_number_estimate(witness), std::move(witness), total_used,
                     starts_improved};
}

double wheel_ratio(const PointSequence& seq) {
  return ratio_objective(all_norms(seq), 0.0);
}

WheelSearchResult optimize_wheel_points(int n, const SolverConfig& cfg) {
  if (n < 3) throw std::invalid_argument("optimize_wheel_points: need n >= 3");
  check_config(cfg);

  const std::vector<WheelMove> moves = wheel_moves(n);
  const std::vector<double> mus = smoothing_stages(cfg.ratio_tol);

  WheelSearchResult result{PointSequence(ComplexVector::Ones(n)), inf, 0, 0};
  double best_ratio = inf;

  // Same pipeline as solve_upper, on point sequences instead of basis
  // coefficients: descend a balance surrogate, anneal the smoothed ratio,
  // then hop between gap-sign classes with structured and random kicks.  The
  // structured landings need no projection here; spin_sequence writes them
  // down directly.
  for (int s = 0; s < cfg.starts; ++s) {
    Uniform rng(cfg.seed + stream_stride * static_cast<std::uint64_t>(s));
    ComplexVector p0(n);
    if (s == 0) {
      for (int j = 0; j < n; ++j)
        p0[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    } else {
      for (int j = 0; j < n; ++j) p0[j] = rng.annulus_point();
    }
    PointSequence cur(std::move(p0));

    long long used = 0;
    double start_best = inf;
    PointSequence start_seq = cur;
    RealVector norms = all_norms(cur);
    const auto touch = [&](const PointSequence& seq) {
      ++used;
      norms = all_norms(seq);
      const double exact = ratio_objective(norms, 0.0);
      if (exact < start_best) {
        start_best = exact;
        start_seq = seq;
      }
    };

    const auto sweep_descend =
        [&](const std::function<double(const PointSequence&)>& obj, double init,
            double floor) {
          double step = init;
          if (used >= cfg.max_iters) return;
          double cur_val = obj(cur);
          while (step >= floor && used < cfg.max_iters) {
            bool improved = false;
            for (const WheelMove& mv : moves) {
              if (used >= cfg.max_iters) break;
              for (const double t : {step, -step}) {
                PointSequence cand = apply_move(cur, mv, t);
                const double val = obj(cand);
                if (val < cur_val) {
                  cur_val = val;
                  cur = std::move(cand);
                  improved = true;
                  while (used < cfg.max_iters) {
                    PointSequence again = apply_move(cur, mv, t);
                    const double v2 = obj(again);
                    if (v2 < cur_val) {
                      cur_val = v2;
                      cur = std::move(again);
                    } else {
                      break;
                    }
                  }
                  break;
                }
              }
            }
            if (!improved) step *= 0.5;
          }
        };

    const auto balance = [&]() {
      sweep_descend(
          [&](const PointSequence& seq) {
            touch(seq);
            return (norms.array().square() - 1.0).square().sum();
          },
          cfg.step_init, 1e-6);
    };

    const auto descend = [&](const std::vector<double>& stage_mus,
                             double exact_floor) {
      for (const double mu : stage_mus)
        sweep_descend(
            [&](const PointSequence& seq) {
              touch(seq);
              return ratio_objective(norms, mu);
            },
            mu > 0.0 ? std::min(cfg.step_init, 8.0 * mu) : 0.02,
            mu > 0.0 ? std::max(mu / 4.0, step_floor_smooth) : exact_floor);
    };

    const long long polish_reserve =
        std::max<long long>(2000, cfg.max_iters / 20);

    balance();
    descend(mus, step_floor_kick);

    constexpr int spin_total = static_cast<int>(std::size(spin_variants));
    for (int kick = 0; used + polish_reserve < cfg.max_iters; ++kick) {
      cur = start_seq;
      if (kick < spin_total) {
        const auto [winding, defects] = spin_variants[kick];
        cur = spin_sequence(n, winding, defects);
        descend(mus, step_floor_kick);
      } else if ((kick - spin_total) % 3 == 1) {  // scramble, a near-restart
        ComplexVector p = cur.points();
        for (int j = 0; j < n; ++j)
          p[j] *= std::polar(1.0 + 0.3 * (2.0 * rng.next() - 1.0),
                             1.6 * (2.0 * rng.next() - 1.0));
        cur = PointSequence(std::move(p));
        balance();
        descend(mus, step_floor_kick);
      } else {  // jiggle, mild then stronger
        const double a = (kick - spin_total) % 3 == 0 ? 0.15 : 0.5;
        ComplexVector p = cur.points();
        for (int j = 0; j < n; ++j)
          p[j] *= std::polar(1.0 + 0.3 * (2.0 * rng.next() - 1.0),
                             a * (2.0 * rng.next() - 1.0));
        cur = PointSequence(std::move(p));
        descend(kick_mus, step_floor_kick);
      }
    }
    cur = start_seq;
    descend({0.0}, step_floor_exact);

    result.iterations_used += used;
    if (start_best < best_ratio) {
      best_ratio = start_best;
      result.sequence = start_seq;
      ++result.starts_improved;
    }
  }

  if (!std::isfinite(best_ratio))
    throw SolverError("optimize_wheel_points: every start stayed degenerate");

  // rescale so the smallest norm is 1; the ratio is scale-invariant
  const double lo = all_norms(result.sequence).minCoeff();
  result.sequence = PointSequence(result.sequence.points() / lo);
  result.ratio = wheel_ratio(result.sequence);
  return result;
}

double best_move_improvement(const PointSequence& seq,
                             const std::vector<double>& thetas) {
  const double baseline = wheel_ratio(seq);
  const std::vector<WheelMove> moves = wheel_moves(seq.size());
  double best = 0.0;
  for (const double t : thetas)
    for (const WheelMove& mv : moves)
      for (const double signed_t : {t, -t})
        best = std::max(best, baseline - wheel_ratio(apply_move(seq, mv, signed_t)));
  return best;
}

}  // namespace cflow
