#include "posgames/mindeg.hpp"

#include <algorithm>
#include <fmt/core.h>
#include <tuple>

namespace posgames {

namespace {

SimpleGraph induce(const SimpleGraph& g, const VertexSet& keep) {
  SimpleGraph out(g.n());
  for (const Edge& e : g.edges())
    if (keep.contains(e.u) && keep.contains(e.v)) out.add_edge(e.u, e.v);
  return out;
}

}  // namespace

WeakMinDegStrategy::WeakMinDegStrategy(const SimpleGraph& base,
                                       std::vector<int> scope, Player self,
                                       MinDegOptions opts)
    : scope_(std::move(scope)),
      scope_set_(base.n(), scope_),
      self_(self),
      opts_(std::move(opts)) {
  std::sort(scope_.begin(), scope_.end());
  cur_ = induce(base, scope_set_);
  int max_def = 1;
  int s = static_cast<int>(scope_.size());
  for (int v : scope_)
    max_def = std::max(max_def, (s - 1) - cur_.degree_into(v, scope_set_));
  m_ = max_def;
}

std::vector<int> WeakMinDegStrategy::isolated(const Board& board) const {
  std::vector<int> out;
  for (int v : scope_) {
    bool cov = opts_.covered ? opts_.covered(board, v)
                             : board.degree_into(self_, v, scope_set_) > 0;
    if (!cov) out.push_back(v);
  }
  return out;
}

int WeakMinDegStrategy::h_degree(const Board& board, int v) const {
  auto v0 = isolated(board);
  int d = 0;
  for (int w : v0) {
    if (w == v) continue;
    if (!cur_.has_edge(v, w) || !board.is_free(Edge(v, w))) ++d;
  }
  return d;
}

int WeakMinDegStrategy::max_h_degree(const Board& board) const {
  auto v0 = isolated(board);
  int best = 0;
  for (int v : v0) {
    int d = 0;
    for (int w : v0)
      if (w != v && (!cur_.has_edge(v, w) || !board.is_free(Edge(v, w)))) ++d;
    best = std::max(best, d);
  }
  return best;
}

long long WeakMinDegStrategy::potential(const Board& board) const {
  auto v0 = isolated(board);
  long long sum = 0;
  for (int v : v0)
    for (int w : v0)
      if (w != v && (!cur_.has_edge(v, w) || !board.is_free(Edge(v, w)))) ++sum;
  return sum;
}

void WeakMinDegStrategy::maybe_descend(const Board& board) {
  while (m_ >= 3 && max_h_degree(board) <= m_ - 2) {
    auto v0 = isolated(board);
    scope_ = v0;
    scope_set_ = VertexSet(cur_.n(), scope_);
    SimpleGraph next(cur_.n());
    for (size_t i = 0; i < v0.size(); ++i)
      for (size_t j = i + 1; j < v0.size(); ++j) {
        int u = v0[i], w = v0[j];
        if (cur_.has_edge(u, w) && board.is_free(Edge(u, w)))
          next.add_edge(u, w);
      }
    cur_ = std::move(next);
    --m_;
  }
}

StrategyOutcome WeakMinDegStrategy::next_move(const Board& board,
                                              std::optional<Edge>) {
  auto v0 = isolated(board);
  if (v0.empty()) return StrategyOutcome::pass();
  maybe_descend(board);
  v0 = isolated(board);

  std::vector<int> hdeg(cur_.n(), 0);
  VertexSet v0set(cur_.n(), v0);
  for (int v : v0) {
    int d = 0;
    for (int w : v0)
      if (w != v && (!cur_.has_edge(v, w) || !board.is_free(Edge(v, w)))) ++d;
    hdeg[v] = d;
  }
  auto order = v0;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return hdeg[a] != hdeg[b] ? hdeg[a] > hdeg[b] : a < b;
  });

  auto bonus = [&](int u, int v) {
    return opts_.partner_bonus ? opts_.partner_bonus(u, v) : 0;
  };

  // Pair the most obstructed isolated vertex with its most obstructed
  // available partner in the isolated set.
  for (int u : order) {
    int best = -1;
    std::tuple<int, int, int> best_key{-1, 0, 0};
    for (int w : v0) {
      if (w == u || !cur_.has_edge(u, w) || !board.is_free(Edge(u, w)))
        continue;
      std::tuple<int, int, int> key{hdeg[w], bonus(u, w), -w};
      if (key > best_key) {
        best_key = key;
        best = w;
      }
    }
    if (best >= 0) {
      ++moves_;
      return StrategyOutcome::claim(Edge(u, best));
    }
  }

  // No pair inside the isolated set: cover stragglers via already
  // covered vertices of the current scope.
  for (int u : order) {
    int best = -1;
    std::pair<int, int> best_key{0, 0};
    for (int y : scope_) {
      if (y == u || v0set.contains(y)) continue;
      if (!cur_.has_edge(u, y) || !board.is_free(Edge(u, y))) continue;
      std::pair<int, int> key{bonus(u, y), -y};
      if (best < 0 || key > best_key) {
        best_key = key;
        best = y;
      }
    }
    if (best >= 0) {
      ++moves_;
      return StrategyOutcome::claim(Edge(u, best));
    }
  }

  return StrategyOutcome::forfeit("no playable edge into the isolated set");
}

std::string WeakMinDegStrategy::stage_label() const {
  return fmt::format("mindeg m={}", m_);
}

StrongMinDegStrategy::StrongMinDegStrategy(const SimpleGraph& base,
                                           std::vector<int> scope, Player self,
                                           MinDegOptions opts)
    : base_(base),
      scope_(std::move(scope)),
      scope_set_(base.n(), scope_),
      self_(self),
      opts_(std::move(opts)) {
  std::sort(scope_.begin(), scope_.end());
  int s = static_cast<int>(scope_.size());
  escape_window_ = (3 * s) / 8;
  if (s % 2 == 1) {
    stage_ = Stage::WeakDelegate;
    inner_ = std::make_unique<WeakMinDegStrategy>(base_, scope_, self_, opts_);
  } else {
    stage_ = Stage::I;
  }
}

std::vector<int> StrongMinDegStrategy::isolated(const Board& board) const {
  std::vector<int> out;
  for (int v : scope_) {
    bool cov = opts_.covered ? opts_.covered(board, v)
                             : board.degree_into(self_, v, scope_set_) > 0;
    if (!cov) out.push_back(v);
  }
  return out;
}

int StrongMinDegStrategy::blue_max_degree_in_g(const Board& board) const {
  int best = 0;
  Player opp = other(self_);
  for (int v : scope_) {
    int d = 0;
    for (int w : scope_)
      if (w != v && base_.has_edge(v, w) && board.adjacent(opp, v, w)) ++d;
    best = std::max(best, d);
  }
  return best;
}

StrategyOutcome StrongMinDegStrategy::claim_tracked(Edge e) {
  ++moves_;
  return StrategyOutcome::claim(e);
}

StrategyOutcome StrongMinDegStrategy::delegate(const Board& board,
                                               std::optional<Edge> last) {
  auto out = inner_->next_move(board, last);
  if (out.is_claim()) ++moves_;
  return out;
}

void StrongMinDegStrategy::enter_weak(const Board& board, bool exclude_x) {
  std::vector<int> sc;
  for (int v : scope_)
    if (!exclude_x || v != x_) sc.push_back(v);
  // Restart on the board graph minus Blue's edges so the recursion
  // parameter reflects the obstruction already on the board.
  SimpleGraph g2(base_.n());
  Player opp = other(self_);
  for (const Edge& e : base_.edges())
    if (!board.owns(opp, e)) g2.add_edge(e.u, e.v);
  inner_ = std::make_unique<WeakMinDegStrategy>(g2, sc, self_, opts_);
}

StrategyOutcome StrongMinDegStrategy::next_move(const Board& board,
                                                std::optional<Edge> last) {
  if (last && !first_blue_in_g_ && scope_set_.contains(last->u) &&
      scope_set_.contains(last->v) && base_.has_edge(last->u, last->v))
    first_blue_in_g_ = *last;

  switch (stage_) {
    case Stage::Done:
      return StrategyOutcome::pass();
    case Stage::WeakDelegate:
    case Stage::V: {
      auto out = delegate(board, last);
      if (out.kind == StrategyOutcome::Kind::Pass) stage_ = Stage::Done;
      return out;
    }
    case Stage::I: {
      if (!e1_) {
        for (int u : scope_)
          for (int v : scope_) {
            if (v <= u || !base_.has_edge(u, v)) continue;
            Edge e(u, v);
            if (board.is_free(e)) {
              e1_ = e;
              return claim_tracked(e);
            }
          }
        return StrategyOutcome::forfeit("no free board edge to open with");
      }
      if (!first_blue_in_g_) {
        // Blue spent its opening outside the board graph; the tempo gain
        // makes the plain pairing strategy finish strictly first.
        stage_ = Stage::WeakDelegate;
        enter_weak(board, false);
        return delegate(board, last);
      }
      if (x_ < 0) {
        Edge f = *first_blue_in_g_;
        auto outside_e1 = [&](int v) { return v != e1_->u && v != e1_->v; };
        x_ = outside_e1(f.u) ? f.u : f.v;
        a_set_ = VertexSet(base_.n());
        for (int w : scope_)
          if (w != x_ && !base_.has_edge(x_, w)) a_set_.add(w);
        int y = f.u == x_ ? f.v : f.u;
        if (y != x_) a_set_.add(y);
      }
      if (blue_max_degree_in_g(board) >= 2) {
        stage_ = Stage::V;
        enter_weak(board, false);
        return delegate(board, last);
      }
      auto v0 = isolated(board);
      VertexSet v0set(base_.n(), v0);
      std::vector<int> targets;
      for (int w : v0)
        if (a_set_.contains(w)) targets.push_back(w);
      if (!targets.empty()) {
        for (int w : targets) {
          int best = -1;
          bool best_in_a = false;
          for (int wp : v0) {
            if (wp == w || wp == x_) continue;
            if (!base_.has_edge(w, wp) || !board.is_free(Edge(w, wp)))
              continue;
            bool in_a = a_set_.contains(wp);
            if (best < 0 || (in_a && !best_in_a)) {
              best = wp;
              best_in_a = in_a;
            }
          }
          if (best >= 0) return claim_tracked(Edge(w, best));
        }
        return StrategyOutcome::forfeit(
            "stage I: no pairing for a protected vertex");
      }
      stage_ = Stage::II;
      enter_weak(board, true);
      [[fallthrough]];
    }
    case Stage::II:
    case Stage::III: {
      if (stage_ == Stage::II) {
        if (moves_ + 1 > escape_window_) {
          stage_ = Stage::III;
          enter_weak(board, true);
        } else if (blue_max_degree_in_g(board) >= 2) {
          stage_ = Stage::V;
          enter_weak(board, false);
          return delegate(board, last);
        }
      }
      auto v0 = isolated(board);
      int uncovered_not_x = 0;
      for (int v : v0)
        if (v != x_) ++uncovered_not_x;
      if (uncovered_not_x > 1) return delegate(board, last);
      stage_ = Stage::IV;
      [[fallthrough]];
    }
    case Stage::IV: {
      auto v0 = isolated(board);
      if (v0.empty()) {
        stage_ = Stage::Done;
        return StrategyOutcome::pass();
      }
      auto cover_via_any = [&](int u) -> StrategyOutcome {
        for (int y : scope_) {
          if (y == u || !base_.has_edge(u, y)) continue;
          Edge e(u, y);
          if (board.is_free(e)) return claim_tracked(e);
        }
        return StrategyOutcome::forfeit(
            fmt::format("stage IV: no free edge at vertex {}", u));
      };
      int z = -1;
      for (int v : v0)
        if (v != x_) z = v;
      if (z < 0) return cover_via_any(v0.front());
      bool x_open = std::find(v0.begin(), v0.end(), x_) != v0.end();
      if (x_open && base_.has_edge(x_, z) && board.is_free(Edge(x_, z)))
        return claim_tracked(Edge(x_, z));
      return cover_via_any(x_open ? x_ : z);
    }
  }
  return StrategyOutcome::pass();
}

std::string StrongMinDegStrategy::stage_label() const {
  switch (stage_) {
    case Stage::WeakDelegate: return "strong-mindeg delegate";
    case Stage::I: return "strong-mindeg I";
    case Stage::II: return "strong-mindeg II";
    case Stage::III: return "strong-mindeg III";
    case Stage::IV: return "strong-mindeg IV";
    case Stage::V: return "strong-mindeg V";
    case Stage::Done: return "strong-mindeg done";
  }
  return {};
}

}  // namespace posgames
