#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "posgames/graph.hpp"
#include "posgames/strategy.hpp"

namespace posgames {

/// Parameters of the auxiliary bipartite matching game. The board is the
/// edge set of `board_graph` restricted to side1 x side2; U1/U2 are the
/// exempt subsets that may stay half-unmatched.
struct MatchingGameSpec {
  std::vector<int> side1;
  std::vector<int> side2;
  VertexSet u1;
  VertexSet u2;
  SimpleGraph board_graph;  // bipartite board (on global vertex ids)
  long long d = 1;          // danger threshold
  int m = 0;                // degree deficiency of the board graph
  double eps = 0.1;

  /// Optional: vertices an outer strategy already serves elsewhere. A
  /// covered vertex is treated like an exempt one and is never picked as
  /// a partner, so its degree cannot grow through this game.
  std::function<bool(const Board&, int)> covered;

  /// Returns human-readable descriptions of any violated hypothesis.
  /// The game can still be run out-of-hypothesis (flagged, not fatal).
  std::vector<std::string> hypothesis_violations() const;
};

struct MatchingGoals {
  bool graph_is_matching = false;
  bool mandatory_covered = false;   // every non-exempt vertex matched
  bool pressured_covered = false;   // every vertex with d_B >= d matched
  bool exempt_halves_free = false;  // >= half of U1 and of U2 unmatched
  bool all() const {
    return graph_is_matching && mandatory_covered && pressured_covered &&
           exempt_halves_free;
  }
};

/// Maker's strategy for the bipartite matching game: serve dangerous
/// vertices first, then pair mandatory vertices, then sweep stragglers.
class MatchingStrategy : public EdgeStrategy {
 public:
  MatchingStrategy(MatchingGameSpec spec, Player self);

  StrategyOutcome next_move(const Board& board,
                            std::optional<Edge> last_opponent_edge) override;
  std::string name() const override { return "matching"; }

  /// Recomputes the dangerous set from the board (unmatched and
  /// Breaker-saturated to the threshold).
  void refresh_dangerous(const Board& board);
  const std::set<int>& dangerous() const { return dangerous_; }

  MatchingGoals goals_status(const Board& board) const;

  bool matched(int v) const { return matching_.count(v) > 0; }
  int partner(int v) const;
  bool mandatory_covered() const;
  bool mandatory_covered(const Board& board) const;

  /// First mandatory vertex still without a match or outer coverage, or -1.
  int first_stuck(const Board& board) const;
  bool finished(const Board& board);
  int matching_size() const { return static_cast<int>(matching_.size()) / 2; }

  /// Records an edge claimed on this board by an outer strategy so the
  /// matching stays consistent (used by the k-connectivity danger rule).
  void note_external_match(Edge e);

  int rule1_uses() const { return rule1_uses_; }
  int rule3_uses() const { return rule3_uses_; }
  int moves_played() const { return moves_; }

  const MatchingGameSpec& spec() const { return spec_; }

 private:
  bool in_board(int u, int v) const { return spec_.board_graph.has_edge(u, v); }
  bool exempt(int v) const { return spec_.u1.contains(v) || spec_.u2.contains(v); }
  bool covered_now(const Board& board, int v) const {
    return spec_.covered && spec_.covered(board, v);
  }
  long long breaker_board_degree(const Board& board, int v) const;
  void add_match(Edge e);

  MatchingGameSpec spec_;
  Player self_;
  std::map<int, int> matching_;
  std::set<int> dangerous_;
  std::vector<int> all_vertices_;
  int rule1_uses_ = 0;
  int rule3_uses_ = 0;
  int moves_ = 0;
};

}  // namespace posgames
