#include "posgames/gk_family.hpp"

#include <algorithm>
#include <fmt/core.h>

namespace posgames {

int Partition::vertex_count() const {
  int n = 0;
  for (const auto& part : parts) n += static_cast<int>(part.size());
  return n;
}

int Partition::part_of(int v) const {
  for (size_t i = 0; i < parts.size(); ++i)
    for (int u : parts[i])
      if (u == v) return static_cast<int>(i);
  return -1;
}

Partition Partition::round_robin(int n, int k) {
  Partition p;
  p.parts.resize(k - 1);
  for (int v = 0; v < n; ++v) p.parts[v % (k - 1)].push_back(v);
  return p;
}

Partition Partition::blocks(int n, int k) {
  if (n % (k - 1) != 0) throw GameError("Partition::blocks: (k-1) must divide n");
  int len = n / (k - 1);
  Partition p;
  p.parts.resize(k - 1);
  for (int v = 0; v < n; ++v) p.parts[v / len].push_back(v);
  return p;
}

bool Partition::valid_for(int n) const {
  std::vector<char> seen(n, 0);
  for (const auto& part : parts)
    for (int v : part) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  return vertex_count() == n;
}

namespace {

// Size of a maximum matching between parts S and T in g, truncated at cap.
// Augmenting-path search, exact.
int bipartite_matching_size(const SimpleGraph& g, const std::vector<int>& S,
                            const std::vector<int>& T, int cap) {
  std::vector<int> match_t(T.size(), -1);
  int size = 0;
  for (size_t si = 0; si < S.size() && size < cap; ++si) {
    std::vector<char> visited(T.size(), 0);
    // DFS for an augmenting path from S[si].
    auto augment = [&](auto&& self, int s) -> bool {
      for (size_t ti = 0; ti < T.size(); ++ti) {
        if (visited[ti] || !g.has_edge(S[s], T[ti])) continue;
        visited[ti] = 1;
        if (match_t[ti] == -1 || self(self, match_t[ti])) {
          match_t[ti] = static_cast<int>(s);
          return true;
        }
      }
      return false;
    };
    if (augment(augment, static_cast<int>(si))) ++size;
  }
  return size;
}

// Number of foreign parts into which v has no edge.
int missing_part_count(const SimpleGraph& g, const Partition& p, int my_part,
                       int v) {
  int missing = 0;
  for (int j = 0; j < p.part_count(); ++j) {
    if (j == my_part) continue;
    bool any = false;
    for (int u : p.parts[j])
      if (g.has_edge(v, u)) {
        any = true;
        break;
      }
    if (!any) ++missing;
  }
  return missing;
}

}  // namespace

GkCertificate verify_membership(const SimpleGraph& g, const Partition& p,
                                int k,
                                const std::vector<std::vector<int>>& cycles) {
  if (k < 3) throw GameError("verify_membership: k must be at least 3");
  if (p.part_count() != k - 1 || !p.valid_for(g.n()))
    throw GameError("verify_membership: invalid partition");
  if (static_cast<int>(cycles.size()) != k - 1)
    throw GameError("verify_membership: need one cycle witness per part");

  GkCertificate cert;
  cert.partition = p;
  cert.hamilton_cycles = cycles;

  // (i) part sizes
  for (int i = 0; i < k - 1; ++i)
    if (p.parts[i].size() < 5) {
      cert.properties[0] = {false, fmt::format("part {} has size {}", i,
                                               p.parts[i].size())};
      break;
    }

  // (ii) minimum degree
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) < k) {
      cert.properties[1] = {false,
                            fmt::format("vertex {} has degree {}", v, g.degree(v))};
      break;
    }

  // (iii) each part's witness cycle is a Hamilton cycle of the part,
  // present in g
  for (int i = 0; i < k - 1 && cert.properties[2].pass; ++i) {
    const auto& cyc = cycles[i];
    std::vector<int> sorted_cycle = cyc, sorted_part = p.parts[i];
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    std::sort(sorted_part.begin(), sorted_part.end());
    if (sorted_cycle != sorted_part) {
      cert.properties[2] = {false,
                            fmt::format("cycle {} is not a permutation of its part", i)};
      break;
    }
    for (size_t t = 0; t < cyc.size(); ++t) {
      int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
      if (!g.has_edge(a, b)) {
        cert.properties[2] = {
            false, fmt::format("cycle {} edge {}-{} missing from graph", i, a, b)};
        break;
      }
    }
  }

  // (iv) every cross pair admits a matching of size 3
  for (int i = 0; i < k - 1 && cert.properties[3].pass; ++i)
    for (int j = i + 1; j < k - 1; ++j) {
      int m = bipartite_matching_size(g, p.parts[i], p.parts[j], 3);
      if (m < 3) {
        cert.properties[3] = {
            false, fmt::format("pair ({},{}) has matching size {}", i, j, m)};
        break;
      }
    }

  // (v) every vertex misses at most one foreign part
  for (int i = 0; i < k - 1 && cert.properties[4].pass; ++i)
    for (int v : p.parts[i]) {
      int missing = missing_part_count(g, p, i, v);
      if (missing > 1) {
        cert.properties[4] = {
            false, fmt::format("vertex {} misses {} foreign parts", v, missing)};
        break;
      }
    }

  // (vi) same-part vertices each missing a part sit at cycle distance >= 2;
  // needs valid cycle witnesses, so a (iii) failure fails it too
  if (!cert.properties[2].pass)
    cert.properties[5] = {false, "no valid cycle witness for spacing check"};
  for (int i = 0; i < k - 1 && cert.properties[5].pass; ++i) {
    std::vector<int> lonely;
    for (int v : p.parts[i])
      if (missing_part_count(g, p, i, v) == 1) lonely.push_back(v);
    for (size_t a = 0; a < lonely.size() && cert.properties[5].pass; ++a)
      for (size_t b = a + 1; b < lonely.size(); ++b) {
        if (cycle_distance(cycles[i], lonely[a], lonely[b]) < 2) {
          cert.properties[5] = {
              false, fmt::format("vertices {} and {} are cycle-adjacent and both miss a part",
                                 lonely[a], lonely[b])};
          break;
        }
      }
  }

  return cert;
}

SparseMember generate_sparse_member(int n, int k) {
  if (k < 3) throw GameError("generate_sparse_member: k must be at least 3");
  if (n % (k - 1) != 0)
    throw GameError("generate_sparse_member: (k-1) must divide n");
  int len = n / (k - 1);
  if (len < 5) throw GameError("generate_sparse_member: part too small");

  Partition p = Partition::blocks(n, k);
  SimpleGraph g(n);
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < k - 1; ++i) {
    cycles.push_back(p.parts[i]);
    for (int t = 0; t < len; ++t)
      g.add_edge(p.parts[i][t], p.parts[i][(t + 1) % len]);
  }
  // Perfect matching between every pair of cycles, position to position.
  for (int i = 0; i < k - 1; ++i)
    for (int j = i + 1; j < k - 1; ++j)
      for (int t = 0; t < len; ++t) g.add_edge(p.parts[i][t], p.parts[j][t]);

  int expected = len * ((k - 1) + (k - 1) * (k - 2) / 2);
  if (g.edge_count() != expected)
    throw GameError("generate_sparse_member: edge count mismatch");

  GkCertificate cert = verify_membership(g, p, k, cycles);
  return SparseMember{std::move(g), std::move(cert)};
}

}  // namespace posgames
