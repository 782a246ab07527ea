#include "posgames/hc_chord.hpp"

#include <algorithm>
#include <fmt/core.h>
#include <tuple>

namespace posgames {

SubgameStrategy::SubgameStrategy(int board_n, std::vector<int> part,
                                 Player self)
    : part_(std::move(part)),
      part_set_(board_n, part_),
      forbidden_(board_n),
      self_(self) {
  std::sort(part_.begin(), part_.end());
}

SimpleGraph SubgameStrategy::own_subgraph(const Board& board) const {
  SimpleGraph g(part_set_.size_hint());
  for (size_t i = 0; i < part_.size(); ++i)
    for (size_t j = i + 1; j < part_.size(); ++j)
      if (board.adjacent(self_, part_[i], part_[j]))
        g.add_edge(part_[i], part_[j]);
  return g;
}

bool SubgameStrategy::done(const Board& board) const {
  return is_hamilton_cycle_with_chord(own_subgraph(board), part_).ok;
}

std::vector<int> SubgameStrategy::cycle(const Board& board) const {
  SimpleGraph g = own_subgraph(board);
  int s = static_cast<int>(part_.size());
  if (g.edge_count() == s + 1) {
    auto check = is_hamilton_cycle_with_chord(g, part_);
    if (!check.ok) return {};
    g.remove_edge(check.chord->u, check.chord->v);
  } else if (g.edge_count() != s) {
    return {};
  }
  for (int v : part_)
    if (g.degree(v) != 2) return {};
  std::vector<int> order;
  order.reserve(s);
  int prev = -1, cur = part_.front();
  do {
    order.push_back(cur);
    auto nb = g.neighbors(cur);
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  } while (cur != part_.front() && static_cast<int>(order.size()) <= s);
  if (static_cast<int>(order.size()) != s) return {};
  return order;
}

StrategyOutcome ReferenceHcChord::next_move(const Board& board,
                                            std::optional<Edge>) {
  if (done(board)) {
    phase_ = Phase::Done;
    return StrategyOutcome::pass();
  }
  SimpleGraph g = own_subgraph(board);
  int s = static_cast<int>(part_.size());

  // Rotated state: a spanning cycle-with-tail left by the rotation move
  // below. The only completions bypass one cycle edge at the junction,
  // turning it into the chord.
  {
    int junction = -1, tail_end = -1;
    bool shape_ok = g.edge_count() == s;
    for (int v : part_) {
      if (g.degree(v) == 3 && junction < 0) junction = v;
      else if (g.degree(v) == 1 && tail_end < 0) tail_end = v;
      else if (g.degree(v) != 2) shape_ok = false;
    }
    if (shape_ok && junction >= 0 && tail_end >= 0) {
      for (int w : g.neighbors(junction)) {
        // Walk away from the junction; a direction that loops back is on
        // the cycle, the one reaching the tail end is not.
        int prev = junction, cur = w;
        while (cur != junction && cur != tail_end) {
          auto nb = g.neighbors(cur);
          int next = (nb[0] == prev) ? nb[1] : nb[0];
          prev = cur;
          cur = next;
        }
        if (cur != junction) continue;  // tail direction
        if (forbidden_.contains(junction) || forbidden_.contains(w)) continue;
        Edge e(tail_end, w);
        if (board.is_free(e)) {
          ++moves_;
          return StrategyOutcome::claim(e);
        }
      }
      return StrategyOutcome::forfeit("no completion from rotated path");
    }
  }

  for (int v : part_)
    if (g.degree(v) > 2)
      return StrategyOutcome::forfeit("own subgraph is not a path system");

  auto cyc = cycle(board);
  if (!cyc.empty()) {
    phase_ = Phase::Chord;
    for (size_t i = 0; i < part_.size(); ++i)
      for (size_t j = i + 1; j < part_.size(); ++j) {
        int u = part_[i], v = part_[j];
        if (forbidden_.contains(u) || forbidden_.contains(v)) continue;
        if (cycle_distance(cyc, u, v) < 2) continue;
        Edge e(u, v);
        if (board.is_free(e)) {
          ++moves_;
          return StrategyOutcome::claim(e);
        }
      }
    return StrategyOutcome::forfeit("no admissible chord");
  }

  phase_ = Phase::Paths;
  // Components of the path system; comp_of indexed by vertex.
  std::vector<int> comp_of(part_set_.size_hint(), -1);
  int ncomp = 0;
  for (int v : part_) {
    if (comp_of[v] >= 0) continue;
    int c = ncomp++;
    std::vector<int> stack{v};
    comp_of[v] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (comp_of[w] < 0) {
          comp_of[w] = c;
          stack.push_back(w);
        }
    }
  }
  std::vector<std::vector<int>> ends(ncomp);  // path endpoints per component
  std::vector<int> comp_size(ncomp, 0);
  for (int v : part_) {
    ++comp_size[comp_of[v]];
    if (g.degree(v) <= 1) ends[comp_of[v]].push_back(v);
  }
  for (int c = 0; c < ncomp; ++c)
    if (ends[c].empty())
      return StrategyOutcome::forfeit("own subgraph closed a short cycle");

  if (ncomp == 1 && comp_size[0] == s) {
    // Spanning path: close the cycle.
    int a = ends[0].front();
    int b = ends[0].size() > 1 ? ends[0][1] : a;
    if (a != b && board.is_free(Edge(a, b))) {
      ++moves_;
      return StrategyOutcome::claim(Edge(a, b));
    }
    // Closing edge blocked: rotate. For path p0..p_{s-1}, the edges
    // p0-p_{i+1} and p_i-p_{s-1} complete a spanning cycle in which the
    // path edge p_i-p_{i+1} becomes the chord.
    std::vector<int> path;
    path.reserve(s);
    int prev = -1, cur = a;
    while (static_cast<int>(path.size()) < s) {
      path.push_back(cur);
      auto nb = g.neighbors(cur);
      if (nb.empty()) break;
      int next = nb[0] == prev ? (nb.size() > 1 ? nb[1] : -1) : nb[0];
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    for (int i = 1; i + 2 < static_cast<int>(path.size()); ++i) {
      if (forbidden_.contains(path[i]) || forbidden_.contains(path[i + 1]))
        continue;
      if (board.is_free(Edge(path[0], path[i + 1])) &&
          board.is_free(Edge(path[i], path[s - 1]))) {
        ++moves_;
        return StrategyOutcome::claim(Edge(path[0], path[i + 1]));
      }
    }
    return StrategyOutcome::forfeit("no extension available");
  }

  auto free_pair = [&](int a, int b) {
    return a != b && comp_of[a] != comp_of[b] && board.is_free(Edge(a, b));
  };
  std::vector<int> all_ends;
  for (int c = 0; c < ncomp; ++c)
    for (int v : ends[c]) all_ends.push_back(v);
  std::sort(all_ends.begin(), all_ends.end());

  if (ncomp == 2) {
    // Look one move ahead: prefer the merge whose closing edge is free too.
    auto other_end = [&](int c, int v) {
      return ends[c].size() > 1 ? (ends[c][0] == v ? ends[c][1] : ends[c][0])
                                : v;
    };
    std::optional<Edge> fallback;
    for (int a : all_ends)
      for (int b : all_ends) {
        if (b <= a || !free_pair(a, b)) continue;
        if (!fallback) fallback = Edge(a, b);
        int oa = other_end(comp_of[a], a), ob = other_end(comp_of[b], b);
        if (oa != ob && board.is_free(Edge(oa, ob))) {
          ++moves_;
          return StrategyOutcome::claim(Edge(a, b));
        }
      }
    if (fallback) {
      ++moves_;
      return StrategyOutcome::claim(*fallback);
    }
    return StrategyOutcome::forfeit("no extension available");
  }

  auto support = [&](int v) {
    int c = 0;
    for (int w : all_ends)
      if (free_pair(v, w)) ++c;
    return c;
  };
  auto breaker_deg = [&](int v) {
    return board.degree_into(other(self_), v, part_set_);
  };
  // Serve the endpoint with the fewest merge options (the one Breaker is
  // closest to isolating), breaking ties toward Breaker pressure.
  int best_a = -1;
  std::tuple<int, int, int> best_a_key{0, 0, 0};
  for (int v : all_ends) {
    int sup = support(v);
    if (sup == 0) continue;
    std::tuple<int, int, int> key{sup, -breaker_deg(v), v};
    if (best_a < 0 || key < best_a_key) {
      best_a_key = key;
      best_a = v;
    }
  }
  if (best_a < 0) return StrategyOutcome::forfeit("no extension available");
  int best_b = -1;
  std::tuple<int, int, int> best_b_key{0, 0, 0};
  for (int w : all_ends) {
    if (!free_pair(best_a, w)) continue;
    std::tuple<int, int, int> key{support(w), -breaker_deg(w), w};
    if (best_b < 0 || key < best_b_key) {
      best_b_key = key;
      best_b = w;
    }
  }
  ++moves_;
  return StrategyOutcome::claim(Edge(best_a, best_b));
}

std::string ReferenceHcChord::stage_label() const {
  switch (phase_) {
    case Phase::Paths: return "hc paths";
    case Phase::Chord: return "hc chord";
    case Phase::Done: return "hc done";
  }
  return {};
}

MinimaxHcChord::MinimaxHcChord(int board_n, std::vector<int> part, Player self)
    : SubgameStrategy(board_n, std::move(part), self) {
  int s = static_cast<int>(part_.size());
  if (s > kMaxPart)
    throw GameError(fmt::format("BoardTooLarge: part has {} vertices", s));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      edge_by_bit_.push_back(Edge(part_[i], part_[j]));
  local_edges_ = static_cast<int>(edge_by_bit_.size());
}

bool MinimaxHcChord::terminal(uint32_t mine) const {
  SimpleGraph g(part_set_.size_hint());
  for (int b = 0; b < local_edges_; ++b)
    if ((mine >> b) & 1) g.add_edge(edge_by_bit_[b].u, edge_by_bit_[b].v);
  return is_hamilton_cycle_with_chord(g, part_).ok;
}

int MinimaxHcChord::value(uint32_t mine, uint32_t theirs, bool our_turn) {
  if (terminal(mine)) return 0;
  uint64_t key = uint64_t{mine} | (uint64_t{theirs} << 16) |
                 (our_turn ? uint64_t{1} << 33 : 0);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  uint32_t all = (local_edges_ == 32) ? ~uint32_t{0}
                                      : ((uint32_t{1} << local_edges_) - 1);
  uint32_t free = all & ~(mine | theirs);
  int result;
  if (our_turn) {
    result = kUnwinnable;
    for (int b = 0; b < local_edges_; ++b)
      if ((free >> b) & 1) {
        int v = value(mine | (uint32_t{1} << b), theirs, false);
        if (v < kUnwinnable) result = std::min(result, 1 + v);
      }
  } else {
    // Opponent may also spend the move off this sub-board.
    result = value(mine, theirs, true);
    for (int b = 0; b < local_edges_; ++b)
      if ((free >> b) & 1)
        result = std::max(result,
                          value(mine, theirs | (uint32_t{1} << b), true));
  }
  memo_[key] = result;
  return result;
}

MinimaxHcChord::Solved MinimaxHcChord::solve(const Board& board) {
  uint32_t mine = 0, theirs = 0;
  for (int b = 0; b < local_edges_; ++b) {
    if (board.owns(self_, edge_by_bit_[b])) mine |= uint32_t{1} << b;
    else if (!board.is_free(edge_by_bit_[b])) theirs |= uint32_t{1} << b;
  }
  int v = value(mine, theirs, true);
  return {v < kUnwinnable, v < kUnwinnable ? v : 0};
}

StrategyOutcome MinimaxHcChord::next_move(const Board& board,
                                          std::optional<Edge>) {
  uint32_t mine = 0, theirs = 0;
  for (int b = 0; b < local_edges_; ++b) {
    if (board.owns(self_, edge_by_bit_[b])) mine |= uint32_t{1} << b;
    else if (!board.is_free(edge_by_bit_[b])) theirs |= uint32_t{1} << b;
  }
  if (terminal(mine)) return StrategyOutcome::pass();
  int best_bit = -1, best_val = kUnwinnable;
  for (int b = 0; b < local_edges_; ++b) {
    if (((mine | theirs) >> b) & 1) continue;
    int v = value(mine | (uint32_t{1} << b), theirs, false);
    if (v < best_val) {
      best_val = v;
      best_bit = b;
    }
  }
  if (best_bit < 0 || best_val >= kUnwinnable)
    return StrategyOutcome::forfeit("cannot force cycle plus chord");
  ++moves_;
  return StrategyOutcome::claim(edge_by_bit_[best_bit]);
}

}  // namespace posgames
