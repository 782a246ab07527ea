#include "posgames/kconn_weak.hpp"

#include <algorithm>
#include <fmt/core.h>

namespace posgames {

KConnWeakStrategy::KConnWeakStrategy(int n, int k, GameConstants constants,
                                     Player self)
    : n_(n),
      k_(k),
      constants_(std::move(constants)),
      self_(self),
      partition_(Partition::round_robin(n, k)),
      chord_endpoints_(n) {
  if (k < 2) throw GameError("kconn: k must be at least 2");
  for (const auto& part : partition_.parts) {
    if (static_cast<int>(part.size()) < 5)
      throw GameError(fmt::format("kconn: part of size {} (need >= 5)",
                                  part.size()));
    subgames_.push_back(
        std::make_unique<ReferenceHcChord>(n, part, self));
  }
}

int KConnWeakStrategy::cross_degree(const Board& board, Player p, int v,
                                    int part) const {
  return board.degree_into(p, v, partition_.parts[part]);
}

StrategyOutcome KConnWeakStrategy::claim_tracked(Edge e, const Board&) {
  ++moves_;
  return StrategyOutcome::claim(e);
}

StrategyOutcome KConnWeakStrategy::subgame_move(int part, const Board& board,
                                                std::optional<Edge> last) {
  auto out = subgames_[part]->next_move(board, last);
  if (out.is_claim()) {
    ++moves_;
    ++stage1_moves_;
  }
  if (out.is_forfeit())
    out.reason = fmt::format("stage I part {}: {}", part, out.reason);
  return out;
}

void KConnWeakStrategy::refresh_danger_pairs(const Board& board) {
  danger_pairs_.clear();
  Player opp = other(self_);
  for (int v = 0; v < n_; ++v) {
    if (board.degree(self_, v) >= k_) continue;
    int iv = partition_.part_of(v);
    for (int i = 0; i < partition_.part_count(); ++i) {
      if (i == iv) continue;
      double size = static_cast<double>(partition_.parts[i].size());
      if (cross_degree(board, opp, v, i) >=
              constants_.danger_fraction * size &&
          cross_degree(board, self_, v, i) == 0) {
        danger_pairs_[{v, i}] = true;
        pairs_seen_[{v, i}] = true;
      }
    }
  }
}

bool KConnWeakStrategy::all_parts_done(const Board& board) const {
  for (const auto& sg : subgames_)
    if (!sg->done(board)) return false;
  return true;
}

void KConnWeakStrategy::finalize_stage1(const Board& board) {
  SimpleGraph m = SimpleGraph::of_player(board, self_);
  cycles_.clear();
  for (int i = 0; i < partition_.part_count(); ++i) {
    cycles_.push_back(subgames_[i]->cycle(board));
    auto chk = is_hamilton_cycle_with_chord(m, partition_.parts[i]);
    if (chk.ok) {
      chord_endpoints_.add(chk.chord->u);
      chord_endpoints_.add(chk.chord->v);
    }
  }
  StageCertificateReport rep;
  rep.stage = "I";
  rep.maker_moves = moves_;
  double budget = n_ + (k_ - 1) + 5 * k_;
  rep.checks.push_back({"stage1 move budget", stage1_moves_ <= budget,
                        static_cast<double>(stage1_moves_), budget});
  double min_density = 1.0;
  for (int i = 0; i < partition_.part_count(); ++i)
    for (int j = 0; j < partition_.part_count(); ++j) {
      if (i == j) continue;
      int freev = 0;
      for (int u : partition_.parts[i])
        if (cross_degree(board, self_, u, j) == 0) ++freev;
      min_density = std::min(
          min_density, freev / static_cast<double>(partition_.parts[i].size()));
    }
  rep.checks.push_back(
      {"cross-free density", min_density >= 0.99, min_density, 0.99});
  rep.checks.push_back({"dangerous pairs created",
                        static_cast<double>(pairs_seen_.size()) <= 5.0 * k_,
                        static_cast<double>(pairs_seen_.size()), 5.0 * k_});
  reports_.push_back(std::move(rep));
}

StrategyOutcome KConnWeakStrategy::stage1(const Board& board,
                                          std::optional<Edge> last) {
  refresh_danger_pairs(board);
  if (all_parts_done(board) && danger_pairs_.empty()) {
    finalize_stage1(board);
    stage_ = Stage::II;
    return stage2(board, last);
  }
  if (stage1_moves_ >= constants_.stage1_move_cap)
    return StrategyOutcome::forfeit("stage I move cap reached");

  // (i) respond inside the part Breaker just played in.
  if (last) {
    int pu = partition_.part_of(last->u), pv = partition_.part_of(last->v);
    if (pu == pv && !subgames_[pu]->done(board)) {
      auto out = subgame_move(pu, board, last);
      if (out.is_claim() || out.is_forfeit()) return out;
    }
  }

  // (ii) clear the worst dangerous pair with a cross edge that serves
  // both endpoints' future degree requirements.
  if (!danger_pairs_.empty()) {
    Player opp = other(self_);
    int best_z = -1, best_i = -1, best_db = -1;
    for (const auto& [pair, _] : danger_pairs_) {
      int db = cross_degree(board, opp, pair.first, pair.second);
      if (db > best_db) {
        best_db = db;
        best_z = pair.first;
        best_i = pair.second;
      }
    }
    int iz = partition_.part_of(best_z);
    int best_w = -1, best_w_deg = 1 << 30;
    for (int w : partition_.parts[best_i]) {
      if (!board.is_free(Edge(best_z, w))) continue;
      if (cross_degree(board, self_, w, iz) != 0) continue;
      if (board.degree(self_, w) >= k_) continue;
      if (board.degree(self_, w) < best_w_deg) {
        best_w_deg = board.degree(self_, w);
        best_w = w;
      }
    }
    if (best_w < 0)
      return StrategyOutcome::forfeit("stage I: no partner for dangerous pair");
    // Neither endpoint may become a chord endpoint now that it carries a
    // cross edge.
    subgames_[best_i]->forbid_chord_endpoint(best_w);
    subgames_[iz]->forbid_chord_endpoint(best_z);
    ++danger_moves_1_;
    ++stage1_moves_;
    return claim_tracked(Edge(best_z, best_w), board);
  }

  // (iii) mirror Breaker's cross-part pressure.
  if (last) {
    int pu = partition_.part_of(last->u), pv = partition_.part_of(last->v);
    if (pu != pv) {
      Player opp = other(self_);
      auto cross_db = [&](int v) {
        return board.degree(opp, v) -
               cross_degree(board, opp, v, partition_.part_of(v));
      };
      int y = last->u, z = last->v;
      if (cross_db(z) > cross_db(y)) std::swap(y, z);
      int py = partition_.part_of(y), pz = partition_.part_of(z);
      if (!subgames_[py]->done(board)) {
        auto out = subgame_move(py, board, std::nullopt);
        if (out.is_claim() || out.is_forfeit()) return out;
      } else if (!subgames_[pz]->done(board)) {
        auto out = subgame_move(pz, board, std::nullopt);
        if (out.is_claim() || out.is_forfeit()) return out;
      }
    }
  }

  // (iv) advance any unfinished part.
  for (int i = 0; i < partition_.part_count(); ++i)
    if (!subgames_[i]->done(board)) {
      auto out = subgame_move(i, board, std::nullopt);
      if (out.is_claim() || out.is_forfeit()) return out;
    }
  return StrategyOutcome::pass();
}

std::vector<int> KConnWeakStrategy::stage2_y(const Board& board) const {
  Player opp = other(self_);
  std::vector<int> y;
  for (int v = 0; v < n_; ++v) {
    if (board.degree(self_, v) >= k_) continue;
    if (chord_endpoints_.contains(v) ||
        board.degree(opp, v) >= constants_.degree_danger_threshold)
      y.push_back(v);
  }
  return y;
}

StrategyOutcome KConnWeakStrategy::stage2(const Board& board,
                                          std::optional<Edge> last) {
  if (current_y_ >= 0 && board.degree(self_, current_y_) >= k_)
    current_y_ = -1;
  if (current_y_ < 0) {
    auto y = stage2_y(board);
    if (y.empty()) {
      if (!enter_stage3(board))
        return StrategyOutcome::forfeit(pending_forfeit_);
      stage_ = Stage::III;
      return stage3(board, last);
    }
    current_y_ = y.front();
  }
  int v = current_y_;
  int iv = partition_.part_of(v);
  for (int j = 0; j < partition_.part_count(); ++j) {
    if (j == iv || cross_degree(board, self_, v, j) != 0) continue;
    int best_w = -1, best_deg = 1 << 30;
    for (int w : partition_.parts[j]) {
      if (!board.is_free(Edge(v, w))) continue;
      if (cross_degree(board, self_, w, iv) != 0) continue;
      if (board.degree(self_, w) >= k_) continue;
      if (board.degree(self_, w) < best_deg) {
        best_deg = board.degree(self_, w);
        best_w = w;
      }
    }
    if (best_w >= 0) return claim_tracked(Edge(v, best_w), board);
  }
  return StrategyOutcome::forfeit("stage II: no cross partner");
}

bool KConnWeakStrategy::enter_stage3(const Board& board) {
  int parts = partition_.part_count();

  // B_i: degree-2 vertices along each cycle, pairwise cycle-distance >= 2,
  // kept clear of the chord endpoints' cycle neighborhoods so that the
  // eventually unmatched ones may safely miss a part.
  std::vector<std::vector<std::vector<int>>> b_groups(parts);
  for (int i = 0; i < parts; ++i) {
    const auto& cyc = cycles_[i];
    std::vector<int> a_i;
    for (int u : cyc) {
      if (board.degree(self_, u) != 2) continue;
      bool near_chord = false;
      for (int c : chord_endpoints_.to_vector())
        if (partition_.part_of(c) == i && cycle_distance(cyc, u, c) <= 1)
          near_chord = true;
      if (!near_chord) a_i.push_back(u);  // already in cycle order
    }
    std::vector<int> picked;
    for (int u : a_i) {
      bool ok = true;
      for (int p : picked)
        if (cycle_distance(cyc, u, p) < 2) ok = false;
      if (ok) picked.push_back(u);
    }
    b_groups[i].assign(parts, {});
    int slot = 0;
    for (int u : picked) {
      if (parts == 1) break;
      if (slot == i) slot = (slot + 1) % parts;
      b_groups[i][slot].push_back(u);
      slot = (slot + 1) % parts;
    }
  }

  pair_games_.clear();
  for (int i = 0; i < parts; ++i)
    for (int j = i + 1; j < parts; ++j) {
      PairGame pg;
      pg.i = i;
      pg.j = j;
      for (int v : partition_.parts[i])
        if (board.degree(self_, v) < k_) pg.a_ij.push_back(v);
      for (int v : partition_.parts[j])
        if (board.degree(self_, v) < k_) pg.a_ji.push_back(v);
      auto trim = [&](std::vector<int>& src) {
        if (static_cast<int>(src.size()) > constants_.b_set_upper)
          src.resize(constants_.b_set_upper);
        if (static_cast<int>(src.size()) < constants_.b_set_lower) {
          pending_forfeit_ = fmt::format(
              "insufficient degree-2 vertices for B sets ({} < {})",
              src.size(), constants_.b_set_lower);
          return false;
        }
        return true;
      };
      auto bij = b_groups[i][j];
      auto bji = b_groups[j][i];
      if (!trim(bij) || !trim(bji)) return false;
      pg.b_ij = VertexSet(n_, bij);
      pg.b_ji = VertexSet(n_, bji);

      // Vertices already reaching the opposite part (danger service in
      // earlier stages) join their side as exempt: an unmatched one costs
      // the certificate nothing, and they hand the other side's excess
      // mandatory vertices rule-(3) partners, keeping the sides viable
      // without shrinking them.
      VertexSet exempt_ij(n_, bij), exempt_ji(n_, bji);
      for (int v : pg.a_ij)
        if (cross_degree(board, self_, v, j) > 0) exempt_ij.add(v);
      for (int v : pg.a_ji)
        if (cross_degree(board, self_, v, i) > 0) exempt_ji.add(v);

      MatchingGameSpec spec;
      spec.side1 = pg.a_ij;
      spec.side2 = pg.a_ji;
      spec.u1 = exempt_ij;
      spec.u2 = exempt_ji;
      spec.board_graph = SimpleGraph(n_);
      for (int u : pg.a_ij)
        for (int v : pg.a_ji)
          if (board.is_free(Edge(u, v))) spec.board_graph.add_edge(u, v);
      spec.d = constants_.matching_d;
      spec.eps = constants_.matching_eps;
      // A vertex can sit on the side of several pair games; once the
      // other games fill its degree to k, this one must leave it alone
      // or the stage I-III degree cap breaks.
      spec.covered = [this, i, j](const Board& b, int v) {
        return stage3_covered(b, v, i, j);
      };
      int m = 0;
      for (int u : pg.a_ij)
        m = std::max(m, static_cast<int>(pg.a_ji.size()) -
                            spec.board_graph.degree(u));
      for (int u : pg.a_ji)
        m = std::max(m, static_cast<int>(pg.a_ij.size()) -
                            spec.board_graph.degree(u));
      spec.m = m;
      pg.strategy = std::make_unique<MatchingStrategy>(std::move(spec), self_);
      pair_games_.push_back(std::move(pg));
    }

  StageCertificateReport rep;
  rep.stage = "II";
  rep.maker_moves = moves_;
  bool window_ok = true;
  for (const auto& pg : pair_games_)
    if (pg.b_ij.count() < constants_.b_set_lower ||
        pg.b_ij.count() > constants_.b_set_upper ||
        pg.b_ji.count() < constants_.b_set_lower ||
        pg.b_ji.count() > constants_.b_set_upper)
      window_ok = false;
  rep.checks.push_back({"B-set size window", window_ok,
                        static_cast<double>(constants_.b_set_lower),
                        static_cast<double>(constants_.b_set_upper)});
  int over = 0;
  for (int v = 0; v < n_; ++v)
    if (board.degree(self_, v) > k_ &&
        !(board.degree(self_, v) == k_ + 1 && chord_endpoints_.contains(v)))
      ++over;
  rep.checks.push_back(
      {"degree cap", over == 0, static_cast<double>(over), 0});
  reports_.push_back(std::move(rep));
  return true;
}

bool KConnWeakStrategy::stage3_covered(const Board& board, int v, int i,
                                       int j) const {
  int d = board.degree(self_, v);
  // Chord endpoints may run to k+1, and must be allowed to: covering
  // them at k can strand them missing a part while the cap still has
  // room for the edge that would fix it.
  int cap = chord_endpoints_.contains(v) ? k_ + 1 : k_;
  if (d >= cap) return true;
  int opposite = partition_.part_of(v) == i ? j : i;
  if (cross_degree(board, self_, v, opposite) == 0) return false;
  // Exempt in this pair: usable as a filler partner only while it keeps
  // one spare degree per foreign part it still misses, or another pair
  // game loses the capacity it needs.
  int missing = 0;
  for (int p = 0; p < partition_.part_count(); ++p)
    if (p != partition_.part_of(v) && cross_degree(board, self_, v, p) == 0)
      ++missing;
  return cap - d <= missing;
}

StrategyOutcome KConnWeakStrategy::stage3_rescue(PairGame& pg,
                                                 const Board& board) {
  // The pair game ran out of legal matches for a straggler: its side of
  // the sub-board lost a slot to coverage from the other pair games.
  // Serve the straggler directly, like stage II does, with any
  // opposite-part vertex that still has cap room.
  int u = pg.strategy->first_stuck(board);
  if (u < 0) return StrategyOutcome::pass();
  int up = partition_.part_of(u);
  int op = up == pg.i ? pg.j : pg.i;
  int best = -1, best_d = 1 << 30;
  for (int w : partition_.parts[op]) {
    if (!board.is_free(Edge(u, w))) continue;
    int dw = board.degree(self_, w);
    int cap = chord_endpoints_.contains(w) ? k_ + 1 : k_;
    if (dw >= cap) continue;
    if (dw < best_d) {
      best_d = dw;
      best = w;
    }
  }
  if (best < 0) return StrategyOutcome::pass();
  return claim_tracked(Edge(u, best), board);
}

void KConnWeakStrategy::refresh_stage3_danger(const Board& board) {
  stage3_danger_.clear();
  Player opp = other(self_);
  for (const auto& pg : pair_games_) {
    if (!pg.strategy->mandatory_covered(board)) continue;
    auto scan = [&](const VertexSet& bset) {
      for (int v : bset.to_vector())
        if (!pg.strategy->matched(v) && board.degree(self_, v) < k_ &&
            board.degree(opp, v) >= constants_.degree_danger_threshold)
          stage3_danger_.push_back(v);
    };
    scan(pg.b_ij);
    scan(pg.b_ji);
  }
  std::sort(stage3_danger_.begin(), stage3_danger_.end(), [&](int a, int b) {
    int da = board.degree(opp, a), db = board.degree(opp, b);
    return da != db ? da > db : a < b;
  });
}

StrategyOutcome KConnWeakStrategy::stage3(const Board& board,
                                          std::optional<Edge> last) {
  refresh_stage3_danger(board);
  bool covered = true;
  for (const auto& pg : pair_games_)
    if (!pg.strategy->mandatory_covered(board)) covered = false;
  if (covered && stage3_danger_.empty()) {
    enter_stage4(board);
    stage_ = Stage::IV;
    return stage4(board, last);
  }

  // (i) respond in the pair sub-board Breaker just played in.
  if (last) {
    for (auto& pg : pair_games_) {
      if (!pg.strategy->spec().board_graph.has_edge(last->u, last->v))
        continue;
      if (pg.strategy->mandatory_covered(board)) break;
      auto out = pg.strategy->next_move(board, last);
      if (out.is_claim()) {
        ++moves_;
        return out;
      }
      if (out.is_forfeit()) {
        auto rescue = stage3_rescue(pg, board);
        if (rescue.is_claim()) return rescue;
        out.reason = "stage III: " + out.reason;
        return out;
      }
      break;
    }
  }

  // (ii) serve the most pressured dangerous reserved vertex.
  if (!stage3_danger_.empty()) {
    for (int u : stage3_danger_) {
      for (auto& pg : pair_games_) {
        bool in_ij = pg.b_ij.contains(u), in_ji = pg.b_ji.contains(u);
        if (!in_ij && !in_ji) continue;
        const VertexSet& otherb = in_ij ? pg.b_ji : pg.b_ij;
        for (int v : otherb.to_vector()) {
          if (pg.strategy->matched(v) || board.degree(self_, v) >= k_ ||
              !board.is_free(Edge(u, v))) continue;
          pg.strategy->note_external_match(Edge(u, v));
          ++danger_moves_3_;
          return claim_tracked(Edge(u, v), board);
        }
      }
    }
    return StrategyOutcome::forfeit("stage III: no danger partner");
  }

  // (iii) advance any uncovered pair sub-game.
  for (auto& pg : pair_games_) {
    if (pg.strategy->mandatory_covered(board)) continue;
    auto out = pg.strategy->next_move(board, std::nullopt);
    if (out.is_claim()) {
      ++moves_;
      return out;
    }
    if (out.is_forfeit()) {
      auto rescue = stage3_rescue(pg, board);
      if (rescue.is_claim()) return rescue;
      out.reason = fmt::format("stage III pair ({},{}): {}", pg.i, pg.j,
                               out.reason);
      return out;
    }
  }
  return StrategyOutcome::pass();
}

void KConnWeakStrategy::enter_stage4(const Board& board) {
  Player opp = other(self_);
  u_set_.clear();
  for (int v = 0; v < n_; ++v)
    if (board.degree(self_, v) < k_) u_set_.push_back(v);
  SimpleGraph base(n_);
  for (size_t a = 0; a < u_set_.size(); ++a)
    for (size_t b = a + 1; b < u_set_.size(); ++b) {
      Edge e(u_set_[a], u_set_[b]);
      if (!board.owns(opp, e)) base.add_edge(e.u, e.v);
    }
  MinDegOptions opts;
  opts.covered = [self = self_, k = k_](const Board& b, int v) {
    return b.degree(self, v) >= k;
  };
  mindeg_ = std::make_unique<WeakMinDegStrategy>(base, u_set_, self_,
                                                 std::move(opts));

  StageCertificateReport rep;
  rep.stage = "III";
  rep.maker_moves = moves_;
  double k6 = 1;
  for (int i = 0; i < 6; ++i) k6 *= k_;
  rep.checks.push_back({"|U| lower bound", u_set_.size() >= n_ / (3 * k6),
                        static_cast<double>(u_set_.size()), n_ / (3 * k6)});
  int bad = 0;
  for (int v = 0; v < n_; ++v) {
    int d = board.degree(self_, v);
    bool ok = d == k_ - 1 || d == k_ ||
              (d == k_ + 1 && chord_endpoints_.contains(v));
    if (!ok) ++bad;
  }
  rep.checks.push_back({"stage IV entry degrees", bad == 0,
                        static_cast<double>(bad), 0});
  reports_.push_back(std::move(rep));
}

StrategyOutcome KConnWeakStrategy::stage4(const Board& board,
                                          std::optional<Edge> last) {
  int min_deg = 1 << 30;
  for (int v = 0; v < n_; ++v)
    min_deg = std::min(min_deg, board.degree(self_, v));
  if (min_deg >= k_) {
    stage_ = Stage::Done;
    return StrategyOutcome::pass();
  }
  auto out = mindeg_->next_move(board, last);
  if (out.is_claim()) {
    ++moves_;
    return out;
  }
  if (out.is_forfeit()) {
    out.reason = "stage IV: " + out.reason;
    return out;
  }
  return StrategyOutcome::forfeit("stage IV: residual deficient vertex");
}

StrategyOutcome KConnWeakStrategy::next_move(const Board& board,
                                             std::optional<Edge> last) {
  if (stage_ == Stage::Done) return StrategyOutcome::pass();
  if (moves_ >= constants_.global_move_cap)
    return StrategyOutcome::forfeit("global move cap reached");
  switch (stage_) {
    case Stage::I: return stage1(board, last);
    case Stage::II: return stage2(board, last);
    case Stage::III: return stage3(board, last);
    case Stage::IV: return stage4(board, last);
    case Stage::Done: break;
  }
  return StrategyOutcome::pass();
}

GkCertificate KConnWeakStrategy::build_certificate(const Board& board) const {
  SimpleGraph m = SimpleGraph::of_player(board, self_);
  std::vector<std::vector<int>> cycles = cycles_;
  if (cycles.size() != static_cast<size_t>(partition_.part_count())) {
    cycles.clear();
    for (const auto& sg : subgames_) cycles.push_back(sg->cycle(board));
  }
  return verify_membership(m, partition_, k_, cycles);
}

std::vector<int> KConnWeakStrategy::degree_cap_violations(
    const Board& board) const {
  std::vector<int> out;
  if (stage_ == Stage::IV || stage_ == Stage::Done) return out;
  for (int v = 0; v < n_; ++v) {
    int d = board.degree(self_, v);
    if (d <= k_) continue;
    bool chord = chord_endpoints_.count() > 0
                     ? chord_endpoints_.contains(v)
                     : board.degree_into(
                           self_, v,
                           partition_.parts[partition_.part_of(v)]) == 3;
    if (d > k_ + 1 || !chord) out.push_back(v);
  }
  return out;
}

std::string KConnWeakStrategy::stage_label() const {
  switch (stage_) {
    case Stage::I: return "kconn I";
    case Stage::II: return "kconn II";
    case Stage::III: return "kconn III";
    case Stage::IV: return "kconn IV";
    case Stage::Done: return "kconn done";
  }
  return {};
}

}  // namespace posgames
