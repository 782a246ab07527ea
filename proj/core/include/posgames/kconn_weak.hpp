#pragma once

#include <map>
#include <memory>
#include <vector>

#include "posgames/constants.hpp"
#include "posgames/gk_family.hpp"
#include "posgames/hc_chord.hpp"
#include "posgames/matching_game.hpp"
#include "posgames/mindeg.hpp"
#include "posgames/strategy.hpp"

namespace posgames {

struct StageCheck {
  std::string name;
  bool pass = false;
  double measured = 0;
  double bound = 0;
};

struct StageCertificateReport {
  std::string stage;  // stage just completed
  int maker_moves = 0;
  std::vector<StageCheck> checks;
};

/// Maker's four-stage strategy for the weak k-vertex-connectivity game:
/// per-part Hamilton cycles with a chord, chord/danger degree fills,
/// cross-part matchings on reserved sets, and a minimum-degree endgame.
class KConnWeakStrategy : public EdgeStrategy {
 public:
  enum class Stage { I, II, III, IV, Done };

  KConnWeakStrategy(int n, int k, GameConstants constants, Player self);

  StrategyOutcome next_move(const Board& board,
                            std::optional<Edge> last_opponent_edge) override;
  std::string name() const override { return "kconn-weak"; }
  std::string stage_label() const override;

  Stage stage() const { return stage_; }
  bool done() const { return stage_ == Stage::Done; }
  const Partition& partition() const { return partition_; }
  const GameConstants& constants() const { return constants_; }
  int moves_played() const { return moves_; }

  /// Certificate for the final (or current) Maker graph, using the
  /// strategy's own partition and cycle witnesses.
  GkCertificate build_certificate(const Board& board) const;

  /// Vertices with d_M >= k+1 that are not chord endpoints (expected
  /// empty; the per-move degree-cap audit for Stages I-III).
  std::vector<int> degree_cap_violations(const Board& board) const;

  const std::vector<StageCertificateReport>& stage_reports() const {
    return reports_;
  }
  int danger_treatments_stage1() const { return danger_moves_1_; }
  int danger_treatments_stage3() const { return danger_moves_3_; }
  int dangerous_pairs_created() const {
    return static_cast<int>(pairs_seen_.size());
  }
  const VertexSet& chord_endpoints() const { return chord_endpoints_; }
  const std::vector<int>& stage4_scope() const { return u_set_; }

 private:
  struct PairGame {
    int i = 0, j = 0;                    // part indices, i < j
    std::vector<int> a_ij, a_ji;         // sides (A_ij in V_i, A_ji in V_j)
    VertexSet b_ij, b_ji;
    std::unique_ptr<MatchingStrategy> strategy;
  };

  StrategyOutcome claim_tracked(Edge e, const Board& board);
  StrategyOutcome subgame_move(int part, const Board& board,
                               std::optional<Edge> last);
  StrategyOutcome stage1(const Board& board, std::optional<Edge> last);
  StrategyOutcome stage2(const Board& board, std::optional<Edge> last);
  StrategyOutcome stage3(const Board& board, std::optional<Edge> last);
  StrategyOutcome stage4(const Board& board, std::optional<Edge> last);

  void refresh_danger_pairs(const Board& board);
  bool all_parts_done(const Board& board) const;
  void finalize_stage1(const Board& board);
  std::vector<int> stage2_y(const Board& board) const;
  bool enter_stage3(const Board& board);  // false => forfeit recorded
  void refresh_stage3_danger(const Board& board);
  void enter_stage4(const Board& board);
  int cross_degree(const Board& board, Player p, int v, int part) const;
  bool stage3_covered(const Board& board, int v, int i, int j) const;
  StrategyOutcome stage3_rescue(PairGame& pg, const Board& board);

  int n_;
  int k_;
  GameConstants constants_;
  Player self_;
  Partition partition_;
  Stage stage_ = Stage::I;
  int moves_ = 0;
  int stage1_moves_ = 0;

  std::vector<std::unique_ptr<SubgameStrategy>> subgames_;
  std::map<std::pair<int, int>, bool> danger_pairs_;     // current D
  std::map<std::pair<int, int>, bool> pairs_seen_;       // ever dangerous
  int danger_moves_1_ = 0;
  int danger_moves_3_ = 0;

  VertexSet chord_endpoints_;
  std::vector<std::vector<int>> cycles_;  // per part, set at Stage I exit
  int current_y_ = -1;

  std::vector<PairGame> pair_games_;
  std::vector<int> stage3_danger_;  // current dangerous vertices, recomputed

  std::vector<int> u_set_;
  std::unique_ptr<WeakMinDegStrategy> mindeg_;

  std::vector<StageCertificateReport> reports_;
  std::string pending_forfeit_;

  friend class KConnStrongStrategy;
};

}  // namespace posgames
