#pragma once

#include <memory>
#include <vector>

#include "posgames/kconn_weak.hpp"
#include "posgames/mindeg.hpp"

namespace posgames {

/// Cheap win test for strong adjudication: degree prefilter before the
/// full connectivity check.
bool player_k_connected(const Board& board, Player p, int k);

/// Red's strategy for the strong k-vertex-connectivity game. Odd kn
/// mirrors the weak strategy move for move; even kn plays the weak
/// Stages I-III, snapshots the degree-(k-1) set, and dispatches on
/// Blue's degree profile.
class KConnStrongStrategy : public EdgeStrategy {
 public:
  enum class Phase {
    WeakMirror,
    Case1,
    Case2,
    Case3SubI,
    Case3SubII,
    Case3SubIII,
    Case3SubIV,
    Done,
  };

  KConnStrongStrategy(int n, int k, GameConstants constants, Player self);

  StrategyOutcome next_move(const Board& board,
                            std::optional<Edge> last_opponent_edge) override;
  std::string name() const override { return "kconn-strong"; }
  std::string stage_label() const override;

  Phase phase() const { return phase_; }
  bool odd_parity() const { return odd_; }
  const std::vector<int>& u0() const { return u0_; }
  int x_vertex() const { return x_; }
  long long case3_window() const { return case3_window_; }
  int moves_played() const { return moves_; }
  KConnWeakStrategy& weak() { return *weak_; }
  const KConnWeakStrategy& weak() const { return *weak_; }

 private:
  bool weak_stage3_complete(const Board& board);
  void dispatch_endgame(const Board& board);
  int blue_max_degree(const Board& board) const;
  std::vector<int> deficient(const Board& board) const;  // d_R < k
  StrategyOutcome tracked(StrategyOutcome out);
  StrategyOutcome case3_iii(const Board& board);
  void enter_case3_iv(const Board& board);
  std::unique_ptr<StrongMinDegStrategy> make_endgame(const Board& board,
                                                     std::vector<int> scope);

  int n_;
  int k_;
  Player self_;
  bool odd_;
  std::unique_ptr<KConnWeakStrategy> weak_;
  Phase phase_ = Phase::WeakMirror;
  std::vector<int> u0_;
  int x_ = -1;
  long long case3_window_ = 0;
  std::unique_ptr<StrongMinDegStrategy> endgame_;
  int moves_ = 0;
};

}  // namespace posgames
