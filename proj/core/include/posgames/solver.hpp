#pragma once

#include <functional>
#include <unordered_map>

#include "posgames/graph.hpp"
#include "posgames/strategy.hpp"

namespace posgames {

/// Winning-set membership test for a player's claimed graph.
using WinPredicate = std::function<bool(const SimpleGraph&)>;

WinPredicate kconn_predicate(int k);
WinPredicate mindeg_predicate(int m);

/// Exhaustive minimax for weak games on tiny boards (n <= 5, 10 edges).
/// Values are the number of Maker moves still needed under optimal play
/// by both sides, or kBreakerWin when Breaker can deny forever.
class WeakSolver {
 public:
  static constexpr int kMaxN = 5;
  static constexpr int kBreakerWin = 1 << 20;

  WeakSolver(int n, WinPredicate maker_wins, Player maker);

  /// Maker moves needed from this position with `to_move` next.
  int value(const Board& board, Player to_move);
  /// Optimal edge for whichever side is to move; nullopt when no free edge.
  std::optional<Edge> best_edge(const Board& board, Player to_move);

  struct Result {
    bool maker_wins = false;
    int optimal_maker_moves = 0;
  };
  /// Solve from the empty board, Breaker moving first (the weak-game
  /// convention).
  Result solve_from_empty();

 private:
  uint64_t encode(const Board& board, Player to_move) const;
  int value_masks(uint32_t maker_mask, uint32_t breaker_mask, bool maker_turn);
  bool winning(uint32_t maker_mask) const;

  int n_;
  int edges_;
  std::vector<Edge> edge_by_bit_;
  WinPredicate pred_;
  Player maker_;
  std::unordered_map<uint64_t, int> memo_;
};

/// Exhaustive minimax for strong games on tiny boards. Scores are from
/// the first player's (Red's) perspective: win fast > draw > lose late.
class StrongSolver {
 public:
  static constexpr int kMaxN = 5;
  static constexpr int kWinBase = 1 << 10;

  StrongSolver(int n, WinPredicate target, Player red);

  int score(const Board& board, Player to_move);
  std::optional<Edge> best_edge(const Board& board, Player to_move);

  enum class Outcome { RedWin, Draw, BlueWin };
  struct Result {
    Outcome outcome = Outcome::Draw;
    int red_moves = 0;  // Red moves to the win when RedWin
  };
  Result solve_from_empty();

 private:
  int score_masks(uint32_t red_mask, uint32_t blue_mask, bool red_turn,
                  int plies);
  bool winning(uint32_t mask) const;

  int n_;
  int edges_;
  std::vector<Edge> edge_by_bit_;
  WinPredicate pred_;
  Player red_;
  std::unordered_map<uint64_t, int> memo_;
};

}  // namespace posgames
