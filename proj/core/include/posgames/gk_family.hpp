#pragma once

#include <string>
#include <vector>

#include "posgames/graph.hpp"

namespace posgames {

/// Partition of [0, n) into k-1 disjoint parts covering every vertex.
struct Partition {
  std::vector<std::vector<int>> parts;

  int part_count() const { return static_cast<int>(parts.size()); }
  int vertex_count() const;
  /// Part index of v, or -1.
  int part_of(int v) const;
  /// Round-robin equipartition: v belongs to part v mod (k-1).
  static Partition round_robin(int n, int k);
  /// Consecutive blocks of equal length (requires (k-1) | n).
  static Partition blocks(int n, int k);

  bool valid_for(int n) const;
};

struct PropertyResult {
  bool pass = true;
  std::string witness;  // human-readable description of the first violation
};

/// Per-property verdicts for membership in the certified k-connected family.
struct GkCertificate {
  Partition partition;
  std::vector<std::vector<int>> hamilton_cycles;  // one per part, may be empty
  PropertyResult properties[6];

  bool all_pass() const {
    for (const auto& p : properties)
      if (!p.pass) return false;
    return true;
  }
};

/// Checks the six structural properties. Cycle witnesses are required for
/// the Hamiltonicity property; pass one per part (vertex sequences).
/// Throws GameError on an invalid partition or missing cycle witness.
GkCertificate verify_membership(const SimpleGraph& g, const Partition& p,
                                int k,
                                const std::vector<std::vector<int>>& cycles);

struct SparseMember {
  SimpleGraph graph;
  GkCertificate certificate;
};

/// The extremal construction: k-1 disjoint cycles of length n/(k-1), each
/// pair of cycles joined by a perfect matching. Requires (k-1) | n and
/// parts of size >= 5.
SparseMember generate_sparse_member(int n, int k);

}  // namespace posgames
