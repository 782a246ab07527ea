#include "posgames/kconn_strong.hpp"

#include <algorithm>
#include <fmt/core.h>

namespace posgames {

bool player_k_connected(const Board& board, Player p, int k) {
  SimpleGraph g = SimpleGraph::of_player(board, p);
  if (g.min_degree() < k) return false;
  return is_k_connected(g, k);
}

KConnStrongStrategy::KConnStrongStrategy(int n, int k, GameConstants constants,
                                         Player self)
    : n_(n),
      k_(k),
      self_(self),
      odd_((static_cast<long long>(k) * n) % 2 != 0),
      weak_(std::make_unique<KConnWeakStrategy>(n, k, constants, self)) {}

std::string KConnStrongStrategy::stage_label() const {
  switch (phase_) {
    case Phase::WeakMirror:
      return odd_ ? "mirror " + weak_->stage_label() : weak_->stage_label();
    case Phase::Case1:
      return "case 1: " + weak_->stage_label();
    case Phase::Case2:
      return "case 2: " + endgame_->stage_label();
    case Phase::Case3SubI:
      return "case 3 (i)";
    case Phase::Case3SubII:
      return "case 3 (ii)";
    case Phase::Case3SubIII:
      return "case 3 (iii)";
    case Phase::Case3SubIV:
      return "case 3 (iv)";
    case Phase::Done:
      return "done";
  }
  return "?";
}

int KConnStrongStrategy::blue_max_degree(const Board& board) const {
  Player opp = other(self_);
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, board.degree(opp, v));
  return best;
}

std::vector<int> KConnStrongStrategy::deficient(const Board& board) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (board.degree(self_, v) < k_) out.push_back(v);
  return out;
}

StrategyOutcome KConnStrongStrategy::tracked(StrategyOutcome out) {
  if (out.is_claim()) ++moves_;
  return out;
}

bool KConnStrongStrategy::weak_stage3_complete(const Board& board) {
  if (weak_->stage_ != KConnWeakStrategy::Stage::III) return false;
  weak_->refresh_stage3_danger(board);
  if (!weak_->stage3_danger_.empty()) return false;
  for (const auto& pg : weak_->pair_games_)
    if (!pg.strategy->mandatory_covered(board)) return false;
  return true;
}

std::unique_ptr<StrongMinDegStrategy> KConnStrongStrategy::make_endgame(
    const Board& board, std::vector<int> scope) {
  Player opp = other(self_);
  SimpleGraph base(n_);
  for (size_t a = 0; a < scope.size(); ++a)
    for (size_t b = a + 1; b < scope.size(); ++b) {
      Edge e(scope[a], scope[b]);
      if (!board.owns(opp, e)) base.add_edge(e.u, e.v);
    }
  MinDegOptions opts;
  opts.covered = [self = self_, k = k_](const Board& b, int v) {
    return b.degree(self, v) >= k;
  };
  return std::make_unique<StrongMinDegStrategy>(base, std::move(scope), self_,
                                                std::move(opts));
}

void KConnStrongStrategy::dispatch_endgame(const Board& board) {
  Player opp = other(self_);
  u0_.clear();
  for (int v = 0; v < n_; ++v)
    if (board.degree(self_, v) < k_) u0_.push_back(v);

  if (blue_max_degree(board) > k_) {
    phase_ = Phase::Case1;  // Blue overcommitted somewhere; the weak
    return;                 // endgame wins with moves to spare.
  }
  bool blue_light = true;
  for (int v : u0_)
    if (board.degree(opp, v) >= k_) blue_light = false;
  if (blue_light) {
    phase_ = Phase::Case2;
    endgame_ = make_endgame(board, u0_);
    return;
  }
  for (int v : u0_)
    if (board.degree(opp, v) >= k_) {
      x_ = v;
      break;
    }
  std::vector<int> scope;
  for (int v : u0_)
    if (v != x_) scope.push_back(v);
  endgame_ = make_endgame(board, std::move(scope));
  case3_window_ =
      (static_cast<long long>(k_) * n_) / 2 -
      static_cast<long long>(u0_.size()) / 3;
  phase_ = Phase::Case3SubI;
}

StrategyOutcome KConnStrongStrategy::case3_iii(const Board& board) {
  auto def = deficient(board);
  if (def.empty()) {
    phase_ = Phase::Done;
    return StrategyOutcome::pass();
  }
  // Serve x first; its cap edge to the other deficient vertex if still
  // free, otherwise any free edge (deficient partner preferred).
  std::stable_sort(def.begin(), def.end(),
                   [&](int a, int b) { return (a == x_) > (b == x_); });
  int v = def.front();
  if (def.size() == 2) {
    Edge e(def[0], def[1]);
    if (board.is_free(e)) return tracked(StrategyOutcome::claim(e));
  }
  for (int w = 0; w < n_; ++w)
    if (w != v && board.is_free(Edge(v, w)))
      return tracked(StrategyOutcome::claim(Edge(v, w)));
  return StrategyOutcome::forfeit(
      fmt::format("case 3 (iii): no free edge at vertex {}", v));
}

void KConnStrongStrategy::enter_case3_iv(const Board& board) {
  std::vector<int> u;
  for (int v = 0; v < n_; ++v)
    if (board.degree(self_, v) < k_) u.push_back(v);
  endgame_ = make_endgame(board, std::move(u));
  phase_ = Phase::Case3SubIV;
}

StrategyOutcome KConnStrongStrategy::next_move(
    const Board& board, std::optional<Edge> last_opponent_edge) {
  if (phase_ == Phase::WeakMirror && !odd_) {
    if (weak_stage3_complete(board) ||
        weak_->stage() == KConnWeakStrategy::Stage::IV ||
        weak_->stage() == KConnWeakStrategy::Stage::Done)
      dispatch_endgame(board);
  }

  switch (phase_) {
    case Phase::WeakMirror:
    case Phase::Case1:
      return tracked(weak_->next_move(board, last_opponent_edge));

    case Phase::Case2: {
      auto out = endgame_->next_move(board, last_opponent_edge);
      if (out.is_claim()) return tracked(out);
      if (out.is_forfeit()) {
        out.reason = "case 2: " + out.reason;
        return out;
      }
      phase_ = Phase::Done;
      return out;
    }

    case Phase::Case3SubI:
      if (blue_max_degree(board) > k_) {
        enter_case3_iv(board);
        return next_move(board, last_opponent_edge);
      }
      if (moves_ + 1 > case3_window_) phase_ = Phase::Case3SubII;
      [[fallthrough]];

    case Phase::Case3SubII: {
      auto def = deficient(board);
      std::erase(def, x_);
      if (def.size() <= 1) {
        phase_ = Phase::Case3SubIII;
        return case3_iii(board);
      }
      auto out = endgame_->next_move(board, last_opponent_edge);
      if (out.is_claim()) return tracked(out);
      if (out.is_forfeit()) {
        out.reason = "case 3: " + out.reason;
        return out;
      }
      phase_ = Phase::Case3SubIII;
      return case3_iii(board);
    }

    case Phase::Case3SubIII:
      return case3_iii(board);

    case Phase::Case3SubIV: {
      auto out = endgame_->next_move(board, last_opponent_edge);
      if (out.is_claim()) return tracked(out);
      if (out.is_forfeit()) {
        out.reason = "case 3 (iv): " + out.reason;
        return out;
      }
      phase_ = Phase::Done;
      return out;
    }

    case Phase::Done:
      return StrategyOutcome::pass();
  }
  return StrategyOutcome::pass();
}

}  // namespace posgames
