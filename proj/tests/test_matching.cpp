#include <random>

#include "doctest.h"
#include "posgames/matching_game.hpp"

using namespace posgames;

namespace {

MatchingGameSpec make_spec(int per_side, int exempt, long long d, int n_total,
                           double eps = 0.1) {
  MatchingGameSpec spec;
  spec.board_graph = SimpleGraph(n_total);
  for (int u = 0; u < per_side; ++u) {
    spec.side1.push_back(u);
    spec.side2.push_back(per_side + u);
  }
  for (int u : spec.side1)
    for (int v : spec.side2) spec.board_graph.add_edge(u, v);
  spec.u1 = VertexSet(n_total);
  spec.u2 = VertexSet(n_total);
  for (int i = 0; i < exempt; ++i) {
    spec.u1.add(spec.side1[i]);
    spec.u2.add(spec.side2[i]);
  }
  spec.d = d;
  spec.m = 0;
  spec.eps = eps;
  return spec;
}

}  // namespace

TEST_CASE("hypothesis check flags out-of-window parameters") {
  auto good = make_spec(60, 8, 80, 120);
  CHECK(good.hypothesis_violations().empty());

  auto bad = make_spec(60, 2, 80, 120);  // |U| below eps*|V|
  CHECK(!bad.hypothesis_violations().empty());

  auto bad_d = make_spec(60, 8, 10, 120);  // 8/d > eps
  CHECK(!bad_d.hypothesis_violations().empty());
}

TEST_CASE("unopposed play covers all mandatory vertices via rule (2)") {
  auto spec = make_spec(10, 2, 50, 20);
  MatchingStrategy strat(spec, Player::One);
  Board board(20);
  std::optional<Edge> last;
  for (int i = 0; i < 40; ++i) {
    auto out = strat.next_move(board, last);
    REQUIRE(!out.is_forfeit());
    if (!out.is_claim()) break;
    board.claim(Player::One, *out.edge);
  }
  CHECK(strat.finished(board));
  CHECK(strat.rule1_uses() == 0);
  CHECK(strat.rule3_uses() == 0);
  auto goals = strat.goals_status(board);
  CHECK(goals.all());
  // Rule (2) never touches exempt vertices; both stay fully unmatched.
  for (int v : spec.u1.to_vector()) CHECK(!strat.matched(v));
}

TEST_CASE("rule (1) fires on a breaker-saturated vertex") {
  auto spec = make_spec(10, 2, 4, 20);  // low threshold so danger is reachable
  MatchingStrategy strat(spec, Player::One);
  Board board(20);
  // Breaker loads vertex 5 with 4 board edges before Maker moves.
  for (int t = 0; t < 4; ++t) board.claim(Player::Two, Edge(5, 10 + t));
  strat.refresh_dangerous(board);
  CHECK(strat.dangerous().count(5) == 1);
  auto out = strat.next_move(board, std::nullopt);
  REQUIRE(out.is_claim());
  CHECK((out.edge->u == 5 || out.edge->v == 5));
  CHECK(strat.rule1_uses() == 1);
  CHECK(strat.matched(5));
}

TEST_CASE("note_external_match keeps the matching consistent") {
  auto spec = make_spec(6, 1, 30, 12);
  MatchingStrategy strat(spec, Player::One);
  strat.note_external_match(Edge(0, 6));
  CHECK(strat.matched(0));
  CHECK(strat.partner(0) == 6);
  CHECK(strat.partner(6) == 0);
  CHECK(strat.partner(1) == -1);
}

TEST_CASE("goals hold against a random breaker on the board") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto spec = make_spec(12, 2, 8, 24);
    MatchingStrategy strat(spec, Player::One);
    Board board(24);
    std::optional<Edge> last;
    for (int round = 0; round < 60; ++round) {
      // Breaker first, restricted to the bipartite board.
      std::vector<Edge> free;
      for (int u : spec.side1)
        for (int v : spec.side2)
          if (board.is_free(Edge(u, v))) free.push_back(Edge(u, v));
      if (!free.empty()) {
        Edge e = free[rng() % free.size()];
        board.claim(Player::Two, e);
        last = e;
      }
      auto out = strat.next_move(board, last);
      REQUIRE(!out.is_forfeit());
      if (!out.is_claim()) break;
      board.claim(Player::One, *out.edge);
      if (strat.finished(board)) break;
    }
    auto goals = strat.goals_status(board);
    CHECK(goals.graph_is_matching);
    CHECK(goals.mandatory_covered);
    CHECK(goals.pressured_covered);
    CHECK(goals.exempt_halves_free);
  }
}
