#pragma once

#include <unordered_map>
#include <vector>

#include "posgames/graph.hpp"
#include "posgames/strategy.hpp"

namespace posgames {

/// Strategy interface for the Hamilton-cycle-with-chord subgame on one
/// part. Chord endpoints can be vetoed mid-game by the outer strategy
/// (a vertex already carrying cross-part edges must not gain the chord).
class SubgameStrategy : public EdgeStrategy {
 public:
  SubgameStrategy(int board_n, std::vector<int> part, Player self);

  virtual bool done(const Board& board) const;
  /// The cycle order once our in-part edges contain a spanning cycle;
  /// empty before that.
  std::vector<int> cycle(const Board& board) const;

  void forbid_chord_endpoint(int v) { forbidden_.add(v); }
  const VertexSet& forbidden_chord_endpoints() const { return forbidden_; }

  const std::vector<int>& part() const { return part_; }
  int moves_played() const { return moves_; }

 protected:
  SimpleGraph own_subgraph(const Board& board) const;
  bool in_part(int v) const { return part_set_.contains(v); }

  std::vector<int> part_;
  VertexSet part_set_;
  VertexSet forbidden_;
  Player self_;
  int moves_ = 0;
};

/// Heuristic: grow a system of disjoint paths, merging at the least
/// supported endpoints first, close the spanning cycle, then claim an
/// admissible chord.
class ReferenceHcChord : public SubgameStrategy {
 public:
  using SubgameStrategy::SubgameStrategy;

  StrategyOutcome next_move(const Board& board,
                            std::optional<Edge> last_opponent_edge) override;
  std::string name() const override { return "hc-chord-reference"; }
  std::string stage_label() const override;

 private:
  enum class Phase { Paths, Chord, Done };
  Phase phase_ = Phase::Paths;
};

/// Exhaustive optimal play for parts of at most 6 vertices; the search
/// itself is the oracle for small-board move counts.
class MinimaxHcChord : public SubgameStrategy {
 public:
  MinimaxHcChord(int board_n, std::vector<int> part, Player self);

  StrategyOutcome next_move(const Board& board,
                            std::optional<Edge> last_opponent_edge) override;
  std::string name() const override { return "hc-chord-minimax"; }

  struct Solved {
    bool winnable = false;
    int optimal_moves = 0;  // our moves still needed, minimax-optimal
  };
  Solved solve(const Board& board);

  static constexpr int kMaxPart = 6;
  static constexpr int kUnwinnable = 1 << 20;

 private:
  int value(uint32_t mine, uint32_t theirs, bool our_turn);
  bool terminal(uint32_t mine) const;

  int local_edges_ = 0;
  std::vector<Edge> edge_by_bit_;
  std::unordered_map<uint64_t, int> memo_;
};

}  // namespace posgames
