#pragma once

#include <bit>
#include <optional>
#include <span>
#include <vector>

#include "posgames/board.hpp"

namespace posgames {

/// Simple undirected graph on [0, n) with bitset adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), rows_(n, std::vector<uint64_t>((n + 63) / 64, 0)) {}

  int n() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v) {
    Edge e(u, v);  // validates
    if (has_edge(e.u, e.v)) return;
    set_bit(e.u, e.v);
    set_bit(e.v, e.u);
    ++m_;
  }
  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    clear_bit(u, v);
    clear_bit(v, u);
    --m_;
  }
  bool has_edge(int u, int v) const {
    return u != v && (rows_[u][v >> 6] >> (v & 63)) & 1;
  }
  int degree(int v) const {
    int d = 0;
    for (uint64_t w : rows_[v]) d += std::popcount(w);
    return d;
  }
  int degree_into(int v, const VertexSet& S) const;
  int min_degree() const;

  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int v) const;
  const std::vector<uint64_t>& row(int v) const { return rows_[v]; }

  static SimpleGraph complete(int n);
  static SimpleGraph of_player(const Board& b, Player p);

 private:
  void set_bit(int u, int v) { rows_[u][v >> 6] |= uint64_t{1} << (v & 63); }
  void clear_bit(int u, int v) { rows_[u][v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<uint64_t>> rows_;
};

struct CutReport {
  int connectivity = 0;
  std::vector<int> witness_cut;  // empty for complete graphs
};

/// Exact vertex connectivity via vertex-split max-flow over all
/// non-adjacent pairs (n-1 for complete graphs). Throws GameError for n < 2.
CutReport vertex_connectivity(const SimpleGraph& g);

/// Cheap predicate: short-circuits as soon as some pair admits fewer
/// than k internally disjoint paths.
bool is_k_connected(const SimpleGraph& g, int k);

/// Exhaustive cross-check: smallest c such that deleting some c-subset
/// disconnects the graph (n-1 for complete graphs). Intended for n <= 16.
int exhaustive_connectivity(const SimpleGraph& g);

struct ChordCheck {
  bool ok = false;
  std::optional<Edge> chord;
};

/// True iff g restricted to S is a spanning cycle on S plus exactly one chord.
ChordCheck is_hamilton_cycle_with_chord(const SimpleGraph& g,
                                        std::span<const int> S);

/// Shorter-arc distance between two vertices of a cycle given as a sequence.
/// Throws GameError when either vertex is not on the cycle.
int cycle_distance(std::span<const int> cycle, int u, int v);

/// Connectivity of the subgraph induced on the complement of `removed`.
bool connected_without(const SimpleGraph& g, const VertexSet& removed);

}  // namespace posgames
