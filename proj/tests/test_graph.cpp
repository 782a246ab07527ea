#include <random>

#include "doctest.h"
#include "posgames/graph.hpp"

using namespace posgames;

namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("connectivity oracles on frozen instances") {
  // K_5 is 4-connected (complete graph convention: n-1).
  CHECK(vertex_connectivity(SimpleGraph::complete(5)).connectivity == 4);
  CHECK(exhaustive_connectivity(SimpleGraph::complete(5)) == 4);

  // C_6 is exactly 2-connected.
  SimpleGraph c6 = cycle(6);
  CHECK(vertex_connectivity(c6).connectivity == 2);
  CHECK(exhaustive_connectivity(c6) == 2);
  CHECK(is_k_connected(c6, 2));
  CHECK(!is_k_connected(c6, 3));

  // A path is 1-connected, a disjoint union is 0-connected.
  SimpleGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(vertex_connectivity(path).connectivity == 1);
  SimpleGraph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK(vertex_connectivity(split).connectivity == 0);
  CHECK(!is_k_connected(split, 1));
}

TEST_CASE("witness cut disconnects the graph") {
  SimpleGraph g = cycle(8);
  g.add_edge(0, 4);  // theta graph, still 2-connected
  CutReport r = vertex_connectivity(g);
  CHECK(r.connectivity == 2);
  VertexSet cut(8, r.witness_cut);
  CHECK((int)r.witness_cut.size() == 2);
  CHECK(!connected_without(g, cut));
}

TEST_CASE("flow connectivity agrees with exhaustive enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 5 + (int)(rng() % 8);  // up to 12
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 55) g.add_edge(u, v);
    CHECK(vertex_connectivity(g).connectivity == exhaustive_connectivity(g));
  }
}

TEST_CASE("connectivity is monotone under edge addition") {
  std::mt19937_64 rng(11);
  SimpleGraph g = cycle(9);
  int prev = 2;
  for (int step = 0; step < 20; ++step) {
    int u = (int)(rng() % 9), v = (int)(rng() % 9);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    int now = vertex_connectivity(g).connectivity;
    CHECK(now >= prev);
    prev = now;
  }
}

TEST_CASE("hamilton cycle with chord recognizer") {
  std::vector<int> part{0, 1, 2, 3, 4};
  SimpleGraph g(7);
  for (int t = 0; t < 5; ++t) g.add_edge(part[t], part[(t + 1) % 5]);
  CHECK(!is_hamilton_cycle_with_chord(g, part).ok);  // no chord yet
  g.add_edge(0, 2);
  auto check = is_hamilton_cycle_with_chord(g, part);
  CHECK(check.ok);
  CHECK(*check.chord == Edge(0, 2));
  g.add_edge(1, 3);  // two chords: no longer exactly one
  CHECK(!is_hamilton_cycle_with_chord(g, part).ok);
}

TEST_CASE("cycle_distance measures the shorter arc") {
  std::vector<int> cyc{3, 1, 4, 5, 9, 2, 6};
  CHECK(cycle_distance(cyc, 3, 1) == 1);
  CHECK(cycle_distance(cyc, 3, 6) == 1);
  CHECK(cycle_distance(cyc, 3, 9) == 3);
  CHECK_THROWS_AS(cycle_distance(cyc, 3, 42), GameError);
}
