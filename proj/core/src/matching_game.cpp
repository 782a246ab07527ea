#include "posgames/matching_game.hpp"

#include <algorithm>
#include <fmt/core.h>

namespace posgames {

std::vector<std::string> MatchingGameSpec::hypothesis_violations() const {
  std::vector<std::string> out;
  size_t n1 = side1.size(), n2 = side2.size();
  if (n1 > n2) out.push_back("(P1): |V1| > |V2|");
  if (static_cast<double>(n2) > (1.0 + eps) * static_cast<double>(n1))
    out.push_back("(P1): |V2| > (1+eps)|V1|");
  for (int u : side1)
    if (board_graph.degree(u) < static_cast<int>(n2) - m)
      out.push_back(fmt::format("(P2): vertex {} has degree {}", u,
                                board_graph.degree(u)));
  for (int u : side2)
    if (board_graph.degree(u) < static_cast<int>(n1) - m)
      out.push_back(fmt::format("(P3): vertex {} has degree {}", u,
                                board_graph.degree(u)));
  double lo1 = eps * static_cast<double>(n1), hi1 = 2 * lo1;
  double lo2 = eps * static_cast<double>(n2), hi2 = 2 * lo2;
  if (u1.count() < lo1 || u1.count() > hi1)
    out.push_back(fmt::format("|U1| = {} outside [{}, {}]", u1.count(), lo1, hi1));
  if (u2.count() < lo2 || u2.count() > hi2)
    out.push_back(fmt::format("|U2| = {} outside [{}, {}]", u2.count(), lo2, hi2));
  if (8.0 / static_cast<double>(d) > eps || eps > 0.1)
    out.push_back("epsilon outside [8/d, 0.1]");
  return out;
}

MatchingStrategy::MatchingStrategy(MatchingGameSpec spec, Player self)
    : spec_(std::move(spec)), self_(self) {
  all_vertices_ = spec_.side1;
  all_vertices_.insert(all_vertices_.end(), spec_.side2.begin(),
                       spec_.side2.end());
  std::sort(all_vertices_.begin(), all_vertices_.end());
}

int MatchingStrategy::partner(int v) const {
  auto it = matching_.find(v);
  return it == matching_.end() ? -1 : it->second;
}

long long MatchingStrategy::breaker_board_degree(const Board& board,
                                                 int v) const {
  long long d = 0;
  for (int u : all_vertices_)
    if (u != v && in_board(v, u) && board.adjacent(other(self_), v, u)) ++d;
  return d;
}

void MatchingStrategy::refresh_dangerous(const Board& board) {
  dangerous_.clear();
  for (int v : all_vertices_)
    if (!matched(v) && !covered_now(board, v) &&
        breaker_board_degree(board, v) >= spec_.d)
      dangerous_.insert(v);
}

void MatchingStrategy::add_match(Edge e) {
  matching_[e.u] = e.v;
  matching_[e.v] = e.u;
  dangerous_.erase(e.u);
  dangerous_.erase(e.v);
}

void MatchingStrategy::note_external_match(Edge e) { add_match(e); }

bool MatchingStrategy::mandatory_covered() const {
  for (int v : all_vertices_)
    if (!exempt(v) && !matched(v)) return false;
  return true;
}

bool MatchingStrategy::mandatory_covered(const Board& board) const {
  for (int v : all_vertices_)
    if (!exempt(v) && !matched(v) && !covered_now(board, v)) return false;
  return true;
}

int MatchingStrategy::first_stuck(const Board& board) const {
  for (int v : all_vertices_)
    if (!exempt(v) && !matched(v) && !covered_now(board, v)) return v;
  return -1;
}

bool MatchingStrategy::finished(const Board& board) {
  refresh_dangerous(board);
  return mandatory_covered() && dangerous_.empty();
}

StrategyOutcome MatchingStrategy::next_move(const Board& board,
                                            std::optional<Edge>) {
  refresh_dangerous(board);

  auto free_pair = [&](int u, int v) {
    return u != v && in_board(u, v) && board.is_free(Edge(u, v));
  };

  // Lowest free partner for u among candidates, or -1.
  auto first_partner = [&](int u, auto&& eligible) -> int {
    for (int v : all_vertices_)
      if (eligible(v) && free_pair(u, v)) return v;
    return -1;
  };

  auto usable = [&](int v) { return !matched(v) && !covered_now(board, v); };

  // "Arbitrary" in the prescribed rules leaves the choice free. Serve the
  // vertex with the fewest remaining partners first (ties: most Breaker
  // pressure), and give it the partner the fewest other mandatory vertices
  // still depend on; a careless order can strand a vertex whose last free
  // partners were spent on vertices that had alternatives.
  auto pick = [&](auto&& u_ok, auto&& v_ok) -> std::optional<Edge> {
    int best_u = -1, best_opts = 1 << 30;
    long long best_db = -1;
    for (int u : all_vertices_) {
      if (!u_ok(u)) continue;
      int opts = 0;
      for (int v : all_vertices_)
        if (v_ok(v) && free_pair(u, v)) ++opts;
      if (opts == 0) continue;
      long long db = breaker_board_degree(board, u);
      if (opts < best_opts || (opts == best_opts && db > best_db)) {
        best_opts = opts;
        best_db = db;
        best_u = u;
      }
    }
    if (best_u < 0) return std::nullopt;
    int best_v = -1, best_demand = 1 << 30;
    for (int v : all_vertices_) {
      if (!v_ok(v) || !free_pair(best_u, v)) continue;
      int demand = 0;
      for (int w : all_vertices_)
        if (w != best_u && !exempt(w) && usable(w) && free_pair(w, v))
          ++demand;
      if (demand < best_demand) {
        best_demand = demand;
        best_v = v;
      }
    }
    return Edge(best_u, best_v);
  };

  // (1) serve a dangerous vertex with any unmatched partner.
  if (!dangerous_.empty()) {
    auto e = pick([&](int u) { return dangerous_.count(u) > 0; }, usable);
    if (!e) return StrategyOutcome::forfeit("no serviceable dangerous vertex");
    ++rule1_uses_;
    ++moves_;
    add_match(*e);
    return StrategyOutcome::claim(*e);
  }

  // (2) pair two unmatched mandatory vertices (one per side).
  {
    auto mandatory_unmatched = [&](int v) { return !exempt(v) && usable(v); };
    auto e = pick(mandatory_unmatched, mandatory_unmatched);
    if (e) {
      ++moves_;
      add_match(*e);
      return StrategyOutcome::claim(*e);
    }
  }

  // (3) match a straggler mandatory vertex with any unmatched vertex.
  {
    auto e = pick([&](int u) { return !exempt(u) && usable(u); }, usable);
    if (e) {
      ++rule3_uses_;
      ++moves_;
      add_match(*e);
      return StrategyOutcome::claim(*e);
    }
  }

  if (mandatory_covered(board)) return StrategyOutcome::pass();
  int stuck = -1, stuck_free = 0;
  for (int v : all_vertices_)
    if (!exempt(v) && usable(v)) {
      stuck = v;
      for (int u : all_vertices_)
        if (free_pair(v, u)) ++stuck_free;
      break;
    }
  return StrategyOutcome::forfeit(
      fmt::format("no edge satisfies any rule (vertex {} has {} free "
                  "board edges, all partners matched)",
                  stuck, stuck_free));
}

MatchingGoals MatchingStrategy::goals_status(const Board& board) const {
  MatchingGoals goals;
  // (i) our claimed edges on this board form a matching
  goals.graph_is_matching = true;
  std::vector<int> deg(board.n(), 0);
  for (int u : all_vertices_)
    for (int v : all_vertices_)
      if (u < v && in_board(u, v) && board.adjacent(self_, u, v)) {
        ++deg[u];
        ++deg[v];
      }
  for (int v : all_vertices_)
    if (deg[v] > 1) goals.graph_is_matching = false;

  // (ii) mandatory vertices all have a matching edge
  goals.mandatory_covered = true;
  for (int v : all_vertices_)
    if (!exempt(v) && !covered_now(board, v) && deg[v] != 1)
      goals.mandatory_covered = false;

  // (iii) pressured vertices are matched
  goals.pressured_covered = true;
  for (int v : all_vertices_)
    if (!covered_now(board, v) &&
        breaker_board_degree(board, v) >= spec_.d && deg[v] == 0)
      goals.pressured_covered = false;

  // (iv) at least half of each exempt set unmatched
  int free1 = 0, free2 = 0;
  for (int v : spec_.side1)
    if (spec_.u1.contains(v) && deg[v] == 0) ++free1;
  for (int v : spec_.side2)
    if (spec_.u2.contains(v) && deg[v] == 0) ++free2;
  goals.exempt_halves_free = 2 * free1 >= spec_.u1.count() &&
                             2 * free2 >= spec_.u2.count();
  return goals;
}

}  // namespace posgames
