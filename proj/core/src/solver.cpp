#include "posgames/solver.hpp"

#include <bit>
#include <fmt/core.h>

namespace posgames {

WinPredicate kconn_predicate(int k) {
  return [k](const SimpleGraph& g) { return is_k_connected(g, k); };
}

WinPredicate mindeg_predicate(int m) {
  return [m](const SimpleGraph& g) { return g.min_degree() >= m; };
}

namespace {

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Edge(i, j));
  return out;
}

uint32_t mask_of(const Board& board, Player p,
                 const std::vector<Edge>& edges) {
  uint32_t m = 0;
  for (size_t b = 0; b < edges.size(); ++b)
    if (board.owns(p, edges[b])) m |= uint32_t{1} << b;
  return m;
}

}  // namespace

WeakSolver::WeakSolver(int n, WinPredicate maker_wins, Player maker)
    : n_(n), pred_(std::move(maker_wins)), maker_(maker) {
  if (n > kMaxN)
    throw GameError(fmt::format("BoardTooLarge: n = {} (solver cap {})", n,
                                kMaxN));
  edge_by_bit_ = all_edges(n);
  edges_ = static_cast<int>(edge_by_bit_.size());
}

bool WeakSolver::winning(uint32_t maker_mask) const {
  SimpleGraph g(n_);
  for (int b = 0; b < edges_; ++b)
    if ((maker_mask >> b) & 1) g.add_edge(edge_by_bit_[b].u, edge_by_bit_[b].v);
  return pred_(g);
}

int WeakSolver::value_masks(uint32_t maker_mask, uint32_t breaker_mask,
                            bool maker_turn) {
  if (winning(maker_mask)) return 0;
  uint64_t key = uint64_t{maker_mask} | (uint64_t{breaker_mask} << 16) |
                 (maker_turn ? uint64_t{1} << 32 : 0);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  uint32_t all = (uint32_t{1} << edges_) - 1;
  uint32_t free = all & ~(maker_mask | breaker_mask);
  int result;
  if (free == 0) {
    result = kBreakerWin;
  } else if (maker_turn) {
    result = kBreakerWin;
    for (int b = 0; b < edges_; ++b)
      if ((free >> b) & 1) {
        int v = value_masks(maker_mask | (uint32_t{1} << b), breaker_mask,
                            false);
        if (v < kBreakerWin && 1 + v < result) result = 1 + v;
      }
  } else {
    result = 0;
    for (int b = 0; b < edges_; ++b)
      if ((free >> b) & 1)
        result = std::max(result, value_masks(maker_mask,
                                              breaker_mask | (uint32_t{1} << b),
                                              true));
  }
  memo_[key] = result;
  return result;
}

int WeakSolver::value(const Board& board, Player to_move) {
  return value_masks(mask_of(board, maker_, edge_by_bit_),
                     mask_of(board, other(maker_), edge_by_bit_),
                     to_move == maker_);
}

std::optional<Edge> WeakSolver::best_edge(const Board& board, Player to_move) {
  uint32_t mm = mask_of(board, maker_, edge_by_bit_);
  uint32_t bm = mask_of(board, other(maker_), edge_by_bit_);
  uint32_t all = (uint32_t{1} << edges_) - 1;
  uint32_t free = all & ~(mm | bm);
  if (free == 0) return std::nullopt;
  bool maker_turn = to_move == maker_;
  int best_bit = -1, best = maker_turn ? kBreakerWin + 1 : -1;
  for (int b = 0; b < edges_; ++b) {
    if (!((free >> b) & 1)) continue;
    int v = maker_turn
                ? value_masks(mm | (uint32_t{1} << b), bm, false)
                : value_masks(mm, bm | (uint32_t{1} << b), true);
    if (maker_turn ? v < best : v > best) {
      best = v;
      best_bit = b;
    }
  }
  return edge_by_bit_[best_bit];
}

WeakSolver::Result WeakSolver::solve_from_empty() {
  int v = value_masks(0, 0, false);  // Breaker moves first
  Result r;
  r.maker_wins = v < kBreakerWin;
  r.optimal_maker_moves = r.maker_wins ? v : 0;
  return r;
}

StrongSolver::StrongSolver(int n, WinPredicate target, Player red)
    : n_(n), pred_(std::move(target)), red_(red) {
  if (n > kMaxN)
    throw GameError(fmt::format("BoardTooLarge: n = {} (solver cap {})", n,
                                kMaxN));
  edge_by_bit_ = all_edges(n);
  edges_ = static_cast<int>(edge_by_bit_.size());
}

bool StrongSolver::winning(uint32_t mask) const {
  SimpleGraph g(n_);
  for (int b = 0; b < edges_; ++b)
    if ((mask >> b) & 1) g.add_edge(edge_by_bit_[b].u, edge_by_bit_[b].v);
  return pred_(g);
}

int StrongSolver::score_masks(uint32_t red_mask, uint32_t blue_mask,
                              bool red_turn, int plies) {
  uint32_t all = (uint32_t{1} << edges_) - 1;
  uint32_t free = all & ~(red_mask | blue_mask);
  if (free == 0) return 0;
  uint64_t key = uint64_t{red_mask} | (uint64_t{blue_mask} << 16) |
                 (red_turn ? uint64_t{1} << 32 : 0);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  int result = red_turn ? -2 * kWinBase : 2 * kWinBase;
  for (int b = 0; b < edges_; ++b) {
    if (!((free >> b) & 1)) continue;
    uint32_t bit = uint32_t{1} << b;
    int s;
    if (red_turn) {
      if (winning(red_mask | bit))
        s = kWinBase - (plies + 1);
      else
        s = score_masks(red_mask | bit, blue_mask, false, plies + 1);
      result = std::max(result, s);
    } else {
      if (winning(blue_mask | bit))
        s = -kWinBase + (plies + 1);
      else
        s = score_masks(red_mask, blue_mask | bit, true, plies + 1);
      result = std::min(result, s);
    }
  }
  memo_[key] = result;
  return result;
}

int StrongSolver::score(const Board& board, Player to_move) {
  uint32_t rm = mask_of(board, red_, edge_by_bit_);
  uint32_t bm = mask_of(board, other(red_), edge_by_bit_);
  return score_masks(rm, bm, to_move == red_,
                     std::popcount(rm) + std::popcount(bm));
}

std::optional<Edge> StrongSolver::best_edge(const Board& board,
                                            Player to_move) {
  uint32_t rm = mask_of(board, red_, edge_by_bit_);
  uint32_t bm = mask_of(board, other(red_), edge_by_bit_);
  int plies = std::popcount(rm) + std::popcount(bm);
  uint32_t all = (uint32_t{1} << edges_) - 1;
  uint32_t free = all & ~(rm | bm);
  if (free == 0) return std::nullopt;
  bool red_turn = to_move == red_;
  int best_bit = -1;
  int best = red_turn ? -2 * kWinBase : 2 * kWinBase;
  for (int b = 0; b < edges_; ++b) {
    if (!((free >> b) & 1)) continue;
    uint32_t bit = uint32_t{1} << b;
    int s;
    if (red_turn)
      s = winning(rm | bit) ? kWinBase - (plies + 1)
                            : score_masks(rm | bit, bm, false, plies + 1);
    else
      s = winning(bm | bit) ? -kWinBase + (plies + 1)
                            : score_masks(rm, bm | bit, true, plies + 1);
    if (red_turn ? s > best : s < best) {
      best = s;
      best_bit = b;
    }
  }
  return edge_by_bit_[best_bit];
}

StrongSolver::Result StrongSolver::solve_from_empty() {
  int s = score_masks(0, 0, true, 0);
  Result r;
  if (s > kWinBase / 2) {
    r.outcome = Outcome::RedWin;
    int plies = kWinBase - s;
    r.red_moves = (plies + 1) / 2;
  } else if (s < -kWinBase / 2) {
    r.outcome = Outcome::BlueWin;
  } else {
    r.outcome = Outcome::Draw;
  }
  return r;
}

}  // namespace posgames
