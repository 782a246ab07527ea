#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "posgames/graph.hpp"
#include "posgames/strategy.hpp"

namespace posgames {

struct MinDegOptions {
  /// Optional tie-break bonus when choosing a partner; larger wins.
  /// Used by the k-connectivity endgame to steer straggler pairings.
  std::function<int(int u, int v)> partner_bonus;
  /// When set, replaces the default coverage test (an own edge into the
  /// scope). The k-connectivity endgame covers a vertex at full board
  /// degree k, regardless of where its earlier edges land.
  std::function<bool(const Board&, int v)> covered;
};

/// Maker's strategy for the positive minimum degree game on a dense
/// graph: repeatedly pair isolated vertices, always serving the vertex
/// most obstructed by Breaker edges and missing board edges, recursing
/// onto the shrinking isolated set as the obstruction degree drops.
class WeakMinDegStrategy : public EdgeStrategy {
 public:
  /// `base` is the game graph on board coordinates; `scope` its vertex set.
  WeakMinDegStrategy(const SimpleGraph& base, std::vector<int> scope,
                     Player self, MinDegOptions opts = {});

  StrategyOutcome next_move(const Board& board,
                            std::optional<Edge> last_opponent_edge) override;
  std::string name() const override { return "weak-mindeg"; }
  std::string stage_label() const override;

  /// Vertices of the scope isolated in our own graph.
  std::vector<int> isolated(const Board& board) const;
  bool finished(const Board& board) const { return isolated(board).empty(); }

  /// Degree of v in the obstruction graph H (opponent edges plus missing
  /// board edges, induced on the isolated set).
  int h_degree(const Board& board, int v) const;
  int max_h_degree(const Board& board) const;
  /// Sum of obstruction degrees over the isolated set.
  long long potential(const Board& board) const;

  int current_m() const { return m_; }
  int moves_played() const { return moves_; }

 private:
  void maybe_descend(const Board& board);
  bool in_cur(int u, int v) const { return cur_.has_edge(u, v); }

  SimpleGraph cur_;            // current (possibly recursed) board graph
  std::vector<int> scope_;     // vertex set of cur_
  VertexSet scope_set_;
  Player self_;
  MinDegOptions opts_;
  int m_;  // current obstruction bound parameter
  int moves_ = 0;
};

/// Red's strategy for the strong positive minimum degree game. Odd boards
/// delegate to the weak strategy outright; even boards reserve one vertex
/// of Blue's opening edge for a controlled two-vertex endgame.
class StrongMinDegStrategy : public EdgeStrategy {
 public:
  StrongMinDegStrategy(const SimpleGraph& base, std::vector<int> scope,
                       Player self, MinDegOptions opts = {});

  StrategyOutcome next_move(const Board& board,
                            std::optional<Edge> last_opponent_edge) override;
  std::string name() const override { return "strong-mindeg"; }
  std::string stage_label() const override;

  int moves_played() const { return moves_; }
  int reserved_vertex() const { return x_; }

 private:
  enum class Stage { WeakDelegate, I, II, III, IV, V, Done };

  std::vector<int> isolated(const Board& board) const;
  int blue_max_degree_in_g(const Board& board) const;
  StrategyOutcome claim_tracked(Edge e);
  StrategyOutcome delegate(const Board& board, std::optional<Edge> last);
  void enter_weak(const Board& board, bool exclude_x);

  SimpleGraph base_;
  std::vector<int> scope_;
  VertexSet scope_set_;
  Player self_;
  MinDegOptions opts_;
  Stage stage_;
  std::unique_ptr<WeakMinDegStrategy> inner_;
  std::optional<Edge> e1_;
  std::optional<Edge> first_blue_in_g_;
  int x_ = -1;
  VertexSet a_set_;  // A: vertices Blue's opening protects against
  int moves_ = 0;
  int escape_window_;  // move index up to which the Stage V escape is live
};

}  // namespace posgames
