#include "posgames/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace posgames {

int SimpleGraph::degree_into(int v, const VertexSet& S) const {
  const auto& r = rows_[v];
  const auto& s = S.words();
  size_t w = std::min(r.size(), s.size());
  int count = 0;
  for (size_t i = 0; i < w; ++i) count += std::popcount(r[i] & s[i]);
  return count;
}

int SimpleGraph::min_degree() const {
  int d = n_ - 1;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::of_player(const Board& b, Player p) {
  SimpleGraph g(b.n());
  for (const Edge& e : b.edges_of(p)) g.add_edge(e.u, e.v);
  return g;
}

namespace {

// Vertex-split unit-capacity flow network for internally disjoint paths.
// Node 2v = in(v), 2v+1 = out(v).
class VertexFlow {
 public:
  explicit VertexFlow(const SimpleGraph& g) : g_(g), n_(g.n()) {
    head_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, kInf);
      add_arc(2 * e.v + 1, 2 * e.u, kInf);
    }
  }

  // Max s-t flow (= number of internally disjoint s-t paths for
  // non-adjacent s,t), capped at `limit`.
  int max_flow(int s, int t, int limit) {
    for (auto& a : arcs_) a.flow = 0;
    // s and t themselves must not be cut.
    set_vertex_cap(s, kInf);
    set_vertex_cap(t, kInf);
    int total = 0;
    while (total < limit && augment(2 * s + 1, 2 * t)) ++total;
    set_vertex_cap(s, 1);
    set_vertex_cap(t, 1);
    return total;
  }

  // After max_flow, the min vertex cut: vertices whose split arc crosses
  // the residual-reachability cut. Call with the same s,t and no cap.
  std::vector<int> min_cut(int s, int t) {
    max_flow(s, t, std::numeric_limits<int>::max());
    set_vertex_cap(s, kInf);
    set_vertex_cap(t, kInf);
    std::vector<char> seen(2 * n_, 0);
    std::queue<int> q;
    q.push(2 * s + 1);
    seen[2 * s + 1] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap - arcs_[a].flow > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          q.push(arcs_[a].to);
        }
      }
    }
    std::vector<int> cut;
    for (int v = 0; v < n_; ++v)
      if (v != s && v != t && seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    set_vertex_cap(s, 1);
    set_vertex_cap(t, 1);
    return cut;
  }

 private:
  static constexpr int kInf = 1 << 28;

  struct Arc {
    int to;
    int cap;
    int flow;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, 0, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  void set_vertex_cap(int v, int cap) {
    // split arc of v was added first for v, at index 2v (forward arc).
    arcs_[2 * static_cast<size_t>(v)].cap = cap;
  }

  bool augment(int s, int t) {
    std::vector<int> pred(2 * n_, -1);
    std::vector<char> seen(2 * n_, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int x = q.front();
      q.pop();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap - arcs_[a].flow > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          pred[arcs_[a].to] = a;
          q.push(arcs_[a].to);
        }
      }
    }
    if (!seen[t]) return false;
    for (int x = t; x != s;) {
      int a = pred[x];
      arcs_[a].flow += 1;
      arcs_[a ^ 1].flow -= 1;
      x = arcs_[a ^ 1].to;
    }
    return true;
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

CutReport vertex_connectivity(const SimpleGraph& g) {
  int n = g.n();
  if (n < 2) throw GameError("vertex_connectivity: graph too small");
  VertexFlow flow(g);
  int best = n - 1;
  std::pair<int, int> best_pair{-1, -1};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      int f = flow.max_flow(u, v, best);
      if (f < best) {
        best = f;
        best_pair = {u, v};
      }
      if (best == 0) goto done;
    }
done:
  CutReport report;
  report.connectivity = best;
  if (best_pair.first >= 0)
    report.witness_cut = flow.min_cut(best_pair.first, best_pair.second);
  return report;
}

bool is_k_connected(const SimpleGraph& g, int k) {
  int n = g.n();
  if (n < 2) throw GameError("is_k_connected: graph too small");
  if (k <= 0) return true;
  if (g.min_degree() < k) return false;
  VertexFlow flow(g);
  bool complete = true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      complete = false;
      if (flow.max_flow(u, v, k) < k) return false;
    }
  return complete ? (n - 1 >= k) : true;
}

bool connected_without(const SimpleGraph& g, const VertexSet& removed) {
  int n = g.n();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!removed.contains(v)) {
      start = v;
      break;
    }
  if (start < 0) return true;  // empty graph is vacuously connected
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y = 0; y < n; ++y)
      if (!seen[y] && !removed.contains(y) && g.has_edge(x, y)) {
        seen[y] = 1;
        ++reached;
        q.push(y);
      }
  }
  return reached == n - removed.count();
}

int exhaustive_connectivity(const SimpleGraph& g) {
  int n = g.n();
  if (n < 2) throw GameError("exhaustive_connectivity: graph too small");
  for (int c = 0; c <= n - 2; ++c) {
    std::vector<int> pick(c);
    for (int i = 0; i < c; ++i) pick[i] = i;
    while (true) {
      VertexSet removed(n);
      for (int v : pick) removed.add(v);
      if (!connected_without(g, removed)) return c;
      int i = c - 1;
      while (i >= 0 && pick[i] == n - c + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n - 1;
}

ChordCheck is_hamilton_cycle_with_chord(const SimpleGraph& g,
                                        std::span<const int> S) {
  ChordCheck result;
  if (S.size() < 4) return result;
  int n = g.n();
  VertexSet in_s(n);
  for (int v : S) {
    if (v < 0 || v >= n) return result;
    in_s.add(v);
  }
  if (in_s.count() != static_cast<int>(S.size())) return result;

  std::vector<Edge> inner;
  for (size_t i = 0; i < S.size(); ++i)
    for (size_t j = i + 1; j < S.size(); ++j)
      if (g.has_edge(S[i], S[j])) inner.emplace_back(S[i], S[j]);
  if (inner.size() != S.size() + 1) return result;

  int deg3_u = -1, deg3_v = -1;
  for (int v : S) {
    int d = g.degree_into(v, in_s);
    if (d == 2) continue;
    if (d == 3) {
      if (deg3_u < 0)
        deg3_u = v;
      else if (deg3_v < 0)
        deg3_v = v;
      else
        return result;
    } else {
      return result;
    }
  }
  if (deg3_u < 0 || deg3_v < 0) return result;
  if (!g.has_edge(deg3_u, deg3_v)) return result;

  // Remove the candidate chord; remainder must be one spanning cycle.
  SimpleGraph h(n);
  for (const Edge& e : inner)
    if (!(e == Edge(deg3_u, deg3_v))) h.add_edge(e.u, e.v);
  VertexSet removed(n);
  for (int v = 0; v < n; ++v)
    if (!in_s.contains(v)) removed.add(v);
  for (int v : S)
    if (h.degree_into(v, in_s) != 2) return result;
  if (!connected_without(h, removed)) return result;

  result.ok = true;
  result.chord = Edge(deg3_u, deg3_v);
  return result;
}

int cycle_distance(std::span<const int> cycle, int u, int v) {
  int iu = -1, iv = -1;
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] == u) iu = static_cast<int>(i);
    if (cycle[i] == v) iv = static_cast<int>(i);
  }
  if (iu < 0 || iv < 0) throw GameError("cycle_distance: vertex not on cycle");
  int d = std::abs(iu - iv);
  return std::min(d, static_cast<int>(cycle.size()) - d);
}

}  // namespace posgames
