#include "posgames/adversary.hpp"

#include <algorithm>

namespace posgames {

AdversaryKind adversary_kind_from_string(const std::string& s) {
  if (s == "random") return AdversaryKind::Random;
  if (s == "greedy") return AdversaryKind::GreedyDegree;
  if (s == "cut-attacker") return AdversaryKind::CutAttacker;
  if (s == "danger-forger") return AdversaryKind::DangerForger;
  if (s == "racer") return AdversaryKind::Racer;
  if (s == "minimax") return AdversaryKind::Minimax;
  if (s == "scripted") return AdversaryKind::Scripted;
  throw GameError("unknown adversary kind: " + s);
}

std::string to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::Random: return "random";
    case AdversaryKind::GreedyDegree: return "greedy";
    case AdversaryKind::CutAttacker: return "cut-attacker";
    case AdversaryKind::DangerForger: return "danger-forger";
    case AdversaryKind::Racer: return "racer";
    case AdversaryKind::Minimax: return "minimax";
    case AdversaryKind::Scripted: return "scripted";
  }
  return "?";
}

namespace {

std::optional<Edge> lowest_free_at(const Board& board, int v) {
  for (int w = 0; w < board.n(); ++w)
    if (w != v && board.is_free(Edge(v, w))) return Edge(v, w);
  return std::nullopt;
}

std::optional<Edge> lowest_free(const Board& board) {
  for (int u = 0; u < board.n(); ++u)
    for (int v = u + 1; v < board.n(); ++v)
      if (board.is_free(Edge(u, v))) return Edge(u, v);
  return std::nullopt;
}

class RandomAdversary : public EdgeStrategy {
 public:
  RandomAdversary(uint64_t seed) : rng_(seed) {}
  StrategyOutcome next_move(const Board& board, std::optional<Edge>) override {
    auto free = board.free_edges();
    if (free.empty()) return StrategyOutcome::pass();
    return StrategyOutcome::claim(free[rng_() % free.size()]);
  }
  std::string name() const override { return "random"; }

 private:
  std::mt19937_64 rng_;
};

class GreedyDegreeAdversary : public EdgeStrategy {
 public:
  GreedyDegreeAdversary(const AdversaryContext& ctx, Player self)
      : need_(ctx.k > 0 ? ctx.k : ctx.m), self_(self) {}
  StrategyOutcome next_move(const Board& board, std::optional<Edge>) override {
    Player maker = other(self_);
    std::optional<Edge> best;
    int best_gain = -1;
    for (int u = 0; u < board.n(); ++u)
      for (int v = u + 1; v < board.n(); ++v) {
        Edge e(u, v);
        if (!board.is_free(e)) continue;
        int gain = -1;
        if (board.degree(maker, u) < need_)
          gain = std::max(gain, board.degree(self_, u) + 1);
        if (board.degree(maker, v) < need_)
          gain = std::max(gain, board.degree(self_, v) + 1);
        if (gain > best_gain) {
          best_gain = gain;
          best = e;
        }
      }
    if (!best) best = lowest_free(board);
    if (!best) return StrategyOutcome::pass();
    return StrategyOutcome::claim(*best);
  }
  std::string name() const override { return "greedy"; }

 private:
  int need_;
  Player self_;
};

class CutAttackerAdversary : public EdgeStrategy {
 public:
  CutAttackerAdversary(const AdversaryContext& ctx, Player self)
      : partition_(ctx.partition), self_(self) {}
  StrategyOutcome next_move(const Board& board, std::optional<Edge>) override {
    Player maker = other(self_);
    std::vector<int> order(board.n());
    for (int v = 0; v < board.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return board.degree(maker, a) < board.degree(maker, b);
    });
    for (int v : order) {
      if (partition_) {
        int pv = partition_->part_of(v);
        for (int w = 0; w < board.n(); ++w)
          if (w != v && partition_->part_of(w) != pv &&
              board.is_free(Edge(v, w)))
            return StrategyOutcome::claim(Edge(v, w));
      }
      if (auto e = lowest_free_at(board, v)) return StrategyOutcome::claim(*e);
    }
    return StrategyOutcome::pass();
  }
  std::string name() const override { return "cut-attacker"; }

 private:
  std::optional<Partition> partition_;
  Player self_;
};

class DangerForgerAdversary : public EdgeStrategy {
 public:
  DangerForgerAdversary(const AdversaryContext& ctx, Player self)
      : partition_(ctx.partition), self_(self) {}
  StrategyOutcome next_move(const Board& board, std::optional<Edge>) override {
    Player maker = other(self_);
    if (target_ < 0 || !lowest_free_at(board, target_)) {
      target_ = -1;
      int best_deg = 1 << 30;
      for (int v = 0; v < board.n(); ++v)
        if (lowest_free_at(board, v) && board.degree(maker, v) < best_deg) {
          best_deg = board.degree(maker, v);
          target_ = v;
        }
      if (target_ < 0) return StrategyOutcome::pass();
    }
    // Pile onto one vertex; with a partition, fill one foreign part at a
    // time so the cross-part danger fraction trips as well.
    std::vector<int> partners;
    for (int w = 0; w < board.n(); ++w)
      if (w != target_ && board.is_free(Edge(target_, w))) partners.push_back(w);
    if (partition_) {
      int own = partition_->part_of(target_);
      std::stable_sort(partners.begin(), partners.end(), [&](int a, int b) {
        int pa = partition_->part_of(a), pb = partition_->part_of(b);
        bool fa = pa != own, fb = pb != own;
        if (fa != fb) return fa;
        return pa != pb ? pa < pb : a < b;
      });
    }
    return StrategyOutcome::claim(Edge(target_, partners.front()));
  }
  std::string name() const override { return "danger-forger"; }

 private:
  std::optional<Partition> partition_;
  Player self_;
  int target_ = -1;
};

class RacerAdversary : public EdgeStrategy {
 public:
  RacerAdversary(const AdversaryContext& ctx, Player self)
      : need_(ctx.k > 0 ? ctx.k : ctx.m), self_(self) {}
  StrategyOutcome next_move(const Board& board, std::optional<Edge>) override {
    std::vector<int> order(board.n());
    for (int v = 0; v < board.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return board.degree(self_, a) < board.degree(self_, b);
    });
    for (int v : order) {
      // Partner with another vertex still short of the degree target.
      for (int w : order)
        if (w != v && board.degree(self_, w) < need_ &&
            board.is_free(Edge(v, w)))
          return StrategyOutcome::claim(Edge(v, w));
      if (board.degree(self_, v) >= need_) break;
      if (auto e = lowest_free_at(board, v)) return StrategyOutcome::claim(*e);
    }
    if (auto e = lowest_free(board)) return StrategyOutcome::claim(*e);
    return StrategyOutcome::pass();
  }
  std::string name() const override { return "racer"; }

 private:
  int need_;
  Player self_;
};

class MinimaxAdversary : public EdgeStrategy {
 public:
  MinimaxAdversary(const AdversaryContext& ctx, Player self) : self_(self) {
    WinPredicate target = ctx.own_target
                              ? ctx.own_target
                              : (ctx.k > 0 ? kconn_predicate(ctx.k)
                                           : mindeg_predicate(ctx.m));
    if (ctx.strong)
      strong_.emplace(ctx.n, target, other(self));
    else
      weak_.emplace(ctx.n, target, other(self));
  }
  StrategyOutcome next_move(const Board& board, std::optional<Edge>) override {
    auto e = strong_ ? strong_->best_edge(board, self_)
                     : weak_->best_edge(board, self_);
    if (!e) return StrategyOutcome::pass();
    return StrategyOutcome::claim(*e);
  }
  std::string name() const override { return "minimax"; }

 private:
  Player self_;
  std::optional<WeakSolver> weak_;
  std::optional<StrongSolver> strong_;
};

class ScriptedAdversary : public EdgeStrategy {
 public:
  explicit ScriptedAdversary(std::vector<Edge> script)
      : script_(std::move(script)) {}
  StrategyOutcome next_move(const Board&, std::optional<Edge>) override {
    if (pos_ >= script_.size())
      return StrategyOutcome::forfeit("ScriptExhausted");
    return StrategyOutcome::claim(script_[pos_++]);
  }
  std::string name() const override { return "scripted"; }

 private:
  std::vector<Edge> script_;
  size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<EdgeStrategy> make_adversary(const AdversarySettings& settings,
                                             const AdversaryContext& ctx,
                                             Player self) {
  switch (settings.kind) {
    case AdversaryKind::Random:
      return std::make_unique<RandomAdversary>(settings.seed);
    case AdversaryKind::GreedyDegree:
      return std::make_unique<GreedyDegreeAdversary>(ctx, self);
    case AdversaryKind::CutAttacker:
      return std::make_unique<CutAttackerAdversary>(ctx, self);
    case AdversaryKind::DangerForger:
      return std::make_unique<DangerForgerAdversary>(ctx, self);
    case AdversaryKind::Racer:
      return std::make_unique<RacerAdversary>(ctx, self);
    case AdversaryKind::Minimax:
      return std::make_unique<MinimaxAdversary>(ctx, self);
    case AdversaryKind::Scripted:
      return std::make_unique<ScriptedAdversary>(settings.script);
  }
  throw GameError("unhandled adversary kind");
}

}  // namespace posgames
