#include <random>

#include "doctest.h"
#include "posgames/hc_chord.hpp"

using namespace posgames;

namespace {

// Run the subgame with an optional Breaker callback; returns Maker moves.
template <typename BreakerFn>
int drive(SubgameStrategy& strat, Board& board, BreakerFn breaker,
          int move_cap = 100) {
  int maker_moves = 0;
  std::optional<Edge> last;
  while (!strat.done(board) && maker_moves < move_cap) {
    auto out = strat.next_move(board, last);
    REQUIRE(!out.is_forfeit());
    if (!out.is_claim()) break;
    board.claim(Player::One, *out.edge);
    ++maker_moves;
    if (strat.done(board)) break;
    last = breaker(board);
  }
  return maker_moves;
}

SimpleGraph own_in_part(const Board& board, const std::vector<int>& part) {
  SimpleGraph g(board.n());
  for (size_t a = 0; a < part.size(); ++a)
    for (size_t b = a + 1; b < part.size(); ++b)
      if (board.adjacent(Player::One, part[a], part[b]))
        g.add_edge(part[a], part[b]);
  return g;
}

}  // namespace

TEST_CASE("unopposed reference play: cycle plus chord in |V_i|+1 moves") {
  std::vector<int> part{2, 3, 5, 7, 9};
  Board board(10);
  ReferenceHcChord strat(10, part, Player::One);
  int moves = drive(strat, board, [](Board&) { return std::nullopt; });
  CHECK(moves == 6);
  CHECK(strat.done(board));
  auto check = is_hamilton_cycle_with_chord(own_in_part(board, part), part);
  CHECK(check.ok);
  CHECK(strat.cycle(board).size() == 5);
}

TEST_CASE("forbidden chord endpoints are respected") {
  std::vector<int> part{0, 1, 2, 3, 4, 5};
  Board board(6);
  ReferenceHcChord strat(6, part, Player::One);
  strat.forbid_chord_endpoint(0);
  strat.forbid_chord_endpoint(1);
  int moves = drive(strat, board, [](Board&) { return std::nullopt; });
  CHECK(moves == 7);
  auto check = is_hamilton_cycle_with_chord(own_in_part(board, part), part);
  REQUIRE(check.ok);
  CHECK(check.chord->u != 0);
  CHECK(check.chord->u != 1);
  CHECK(check.chord->v != 0);
  CHECK(check.chord->v != 1);
}

TEST_CASE("rotation recovers from a blocked closing edge") {
  std::vector<int> part{0, 1, 2, 3, 4, 5, 6};
  Board board(7);
  ReferenceHcChord strat(7, part, Player::One);
  bool blocked = false;
  int moves = drive(strat, board, [&](Board& b) -> std::optional<Edge> {
    SimpleGraph g = own_in_part(b, part);
    if (!blocked && g.edge_count() == (int)part.size() - 1) {
      // Spanning path formed; claim the edge joining its endpoints.
      std::vector<int> ends;
      for (int v : part)
        if (g.degree(v) == 1) ends.push_back(v);
      if (ends.size() == 2 && b.is_free(Edge(ends[0], ends[1]))) {
        Edge e(ends[0], ends[1]);
        b.claim(Player::Two, e);
        blocked = true;
        return e;
      }
    }
    return std::nullopt;
  });
  CHECK(blocked);
  CHECK(strat.done(board));
  CHECK(moves <= 9);  // rotation costs at most one extra pair of moves
  CHECK(is_hamilton_cycle_with_chord(own_in_part(board, part), part).ok);
}

TEST_CASE("reference play survives a random breaker") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> part{0, 1, 2, 3, 4, 5, 6, 7};
    Board board(8);
    ReferenceHcChord strat(8, part, Player::One);
    int moves = drive(strat, board, [&](Board& b) -> std::optional<Edge> {
      auto free = b.free_edges();
      if (free.empty()) return std::nullopt;
      Edge e = free[rng() % free.size()];
      b.claim(Player::Two, e);
      return e;
    });
    CHECK(strat.done(board));
    CHECK(moves <= (int)part.size() + 4);
  }
}

TEST_CASE("minimax oracle: a lone 5-part under strict alternation is lost") {
  // Cycle plus chord needs 6 of the 10 in-part edges; an opponent who
  // answers every move inside the part keeps Maker at 5.
  std::vector<int> part{0, 1, 2, 3, 4};
  Board board(5);
  MinimaxHcChord strat(5, part, Player::One);
  auto solved = strat.solve(board);
  CHECK(!solved.winnable);
  auto out = strat.next_move(board, std::nullopt);
  CHECK(out.is_forfeit());
}

TEST_CASE("minimax oracle: frozen values from partial positions") {
  std::vector<int> part{0, 1, 2, 3, 4};
  {
    // Cycle already owned: one move (any of the five free chords).
    Board board(5);
    for (int t = 0; t < 5; ++t)
      board.claim(Player::One, Edge(part[t], part[(t + 1) % 5]));
    MinimaxHcChord strat(5, part, Player::One);
    auto solved = strat.solve(board);
    CHECK(solved.winnable);
    CHECK(solved.optimal_moves == 1);
  }
  {
    // Spanning path owned: close the cycle, then outlast one chord block.
    Board board(5);
    for (int t = 0; t < 4; ++t) board.claim(Player::One, Edge(t, t + 1));
    MinimaxHcChord strat(5, part, Player::One);
    auto solved = strat.solve(board);
    CHECK(solved.winnable);
    CHECK(solved.optimal_moves == 2);
  }
}

TEST_CASE("minimax play finishes a winnable position") {
  std::vector<int> part{0, 1, 2, 3, 4};
  Board board(5);
  for (int t = 0; t < 4; ++t) board.claim(Player::One, Edge(t, t + 1));
  MinimaxHcChord strat(5, part, Player::One);
  int expected = strat.solve(board).optimal_moves;
  // Breaker answers inside the part with the first free edge.
  int moves = drive(strat, board, [](Board& b) -> std::optional<Edge> {
    auto free = b.free_edges();
    if (free.empty()) return std::nullopt;
    b.claim(Player::Two, free.front());
    return free.front();
  });
  CHECK(strat.done(board));
  CHECK(moves == expected);
}
