#include "doctest.h"
#include "posgames/board.hpp"

using namespace posgames;

TEST_CASE("edges canonicalize and reject self-loops") {
  Edge e(5, 2);
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  CHECK(Edge(2, 5) == e);
  CHECK_THROWS_AS(Edge(3, 3), GameError);
}

TEST_CASE("claiming updates ownership, degrees, and adjacency") {
  Board b(6);
  CHECK(b.total_edges() == 15);
  b.claim(Player::One, Edge(0, 1));
  b.claim(Player::Two, Edge(1, 2));
  CHECK(b.owns(Player::One, Edge(0, 1)));
  CHECK(b.owns(Player::Two, Edge(1, 2)));
  CHECK(b.is_free(Edge(0, 2)));
  CHECK(b.degree(Player::One, 1) == 1);
  CHECK(b.degree(Player::Two, 1) == 1);
  CHECK(b.adjacent(Player::One, 1, 0));
  CHECK(!b.adjacent(Player::One, 1, 2));
  CHECK(b.claimed_count() == 2);
  CHECK(b.claimed_count(Player::One) == 1);
  CHECK(b.free_count() == 13);
}

TEST_CASE("double claim throws regardless of claimant") {
  Board b(4);
  b.claim(Player::One, Edge(0, 1));
  CHECK_THROWS_AS(b.claim(Player::One, Edge(0, 1)), GameError);
  CHECK_THROWS_AS(b.claim(Player::Two, Edge(1, 0)), GameError);
  CHECK_THROWS_AS(b.claim(Player::One, Edge(0, 9)), GameError);
}

TEST_CASE("degree_into restricts to the given set") {
  Board b(8);
  b.claim(Player::One, Edge(0, 1));
  b.claim(Player::One, Edge(0, 2));
  b.claim(Player::One, Edge(0, 7));
  VertexSet s(8, std::vector<int>{1, 2, 3});
  CHECK(b.degree_into(Player::One, 0, s) == 2);
  CHECK(b.degree_into(Player::Two, 0, s) == 0);
  std::vector<int> span{2, 7};
  CHECK(b.degree_into(Player::One, 0, span) == 2);
}

TEST_CASE("free_edges_between returns sorted cross edges only") {
  Board b(6);
  b.claim(Player::Two, Edge(0, 3));
  std::vector<int> s{0, 1}, t{3, 4};
  auto free = b.free_edges_between(s, t);
  CHECK(free == std::vector<Edge>{Edge(0, 4), Edge(1, 3), Edge(1, 4)});
  std::vector<int> overlap{1, 3};
  CHECK_THROWS_AS(b.free_edges_between(s, overlap), GameError);
}

TEST_CASE("degree audit passes on a consistent board") {
  Board b(10);
  b.claim(Player::One, Edge(0, 1));
  b.claim(Player::Two, Edge(2, 3));
  b.claim(Player::One, Edge(4, 9));
  CHECK(b.degrees_consistent());
}

TEST_CASE("vertex set counting and iteration") {
  VertexSet s(100);
  s.add(0);
  s.add(63);
  s.add(64);
  s.add(64);  // idempotent
  CHECK(s.count() == 3);
  CHECK(s.contains(63));
  CHECK(!s.contains(1));
  CHECK(!s.contains(-1));
  s.remove(63);
  CHECK(s.to_vector() == std::vector<int>{0, 64});
  VertexSet t(100, std::vector<int>{64, 70});
  CHECK(s.intersects(t));
}
