#include <random>

#include "doctest.h"
#include "posgames/gk_family.hpp"

using namespace posgames;

TEST_CASE("partition constructors and validity") {
  Partition rr = Partition::round_robin(10, 3);
  CHECK(rr.part_count() == 2);
  CHECK(rr.valid_for(10));
  CHECK(rr.part_of(7) == 1);
  CHECK(rr.part_of(42) == -1);

  Partition bl = Partition::blocks(12, 4);
  CHECK(bl.parts[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(bl.parts[2] == std::vector<int>{8, 9, 10, 11});
  CHECK_THROWS_AS(Partition::blocks(11, 4), GameError);

  Partition broken;
  broken.parts = {{0, 1}, {1, 2}};  // overlap
  CHECK(!broken.valid_for(3));
}

TEST_CASE("sparse member: frozen edge count and connectivity") {
  // k=3, n=12: two 6-cycles plus a perfect matching = 12 + 6 = 18 edges.
  SparseMember m = generate_sparse_member(12, 3);
  CHECK(m.graph.edge_count() == 18);
  CHECK(m.certificate.all_pass());
  CHECK(vertex_connectivity(m.graph).connectivity == 3);
  CHECK(exhaustive_connectivity(m.graph) == 3);

  // k=4, n=15: three 5-cycles, three pairwise matchings = 15 + 15 = 30.
  SparseMember m4 = generate_sparse_member(15, 4);
  CHECK(m4.graph.edge_count() == 30);
  CHECK(m4.certificate.all_pass());
  CHECK(vertex_connectivity(m4.graph).connectivity == 4);

  CHECK_THROWS_AS(generate_sparse_member(8, 3), GameError);   // parts of 4
  CHECK_THROWS_AS(generate_sparse_member(13, 3), GameError);  // 2 | 13 fails
}

TEST_CASE("verify_membership flags each property violation") {
  SparseMember m = generate_sparse_member(12, 3);
  const Partition& p = m.certificate.partition;
  const auto& cycles = m.certificate.hamilton_cycles;

  SUBCASE("degree violation") {
    SimpleGraph g = m.graph;
    for (int w : g.neighbors(0))
      if (g.degree(0) > 2) g.remove_edge(0, w);
    GkCertificate c = verify_membership(g, p, 3, cycles);
    CHECK(!c.properties[1].pass);
    CHECK(!c.all_pass());
  }

  SUBCASE("broken cycle fails (iii) and poisons (vi)") {
    SimpleGraph g = m.graph;
    g.remove_edge(cycles[0][0], cycles[0][1]);
    GkCertificate c = verify_membership(g, p, 3, cycles);
    CHECK(!c.properties[2].pass);
    CHECK(!c.properties[5].pass);
    CHECK(c.properties[5].witness == "no valid cycle witness for spacing check");
  }

  SUBCASE("wrong cycle witness") {
    auto bad = cycles;
    std::swap(bad[0], bad[1]);
    GkCertificate c = verify_membership(m.graph, p, 3, bad);
    CHECK(!c.properties[2].pass);
  }

  SUBCASE("invalid inputs throw") {
    CHECK_THROWS_AS(verify_membership(m.graph, p, 2, cycles), GameError);
    CHECK_THROWS_AS(verify_membership(m.graph, p, 3, {cycles[0]}), GameError);
  }
}

TEST_CASE("random supergraphs of a member stay members") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    SparseMember m = generate_sparse_member(18, 4);
    SimpleGraph g = m.graph;
    for (int extra = 0; extra < 12; ++extra) {
      int u = (int)(rng() % 18), v = (int)(rng() % 18);
      if (u != v) g.add_edge(u, v);
    }
    GkCertificate c = verify_membership(g, m.certificate.partition, 4,
                                        m.certificate.hamilton_cycles);
    CHECK(c.all_pass());
    CHECK(vertex_connectivity(g).connectivity >= 4);
  }
}
