#pragma once

#include <cstdint>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace posgames {

enum class Player : uint8_t { One = 0, Two = 1 };

inline Player other(Player p) { return p == Player::One ? Player::Two : Player::One; }

enum class Ownership : uint8_t { Free = 0, PlayerOne = 1, PlayerTwo = 2 };

inline Ownership to_ownership(Player p) {
  return p == Player::One ? Ownership::PlayerOne : Ownership::PlayerTwo;
}

struct GameError : std::runtime_error {
  explicit GameError(const std::string& what) : std::runtime_error(what) {}
};

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw GameError("Edge: self-loop " + std::to_string(a));
  }

  auto operator<=>(const Edge&) const = default;
};

/// Set of vertices backed by a bitmask, sized for a fixed board.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}
  VertexSet(int n, std::span<const int> vs) : VertexSet(n) {
    for (int v : vs) add(v);
  }

  void add(int v) {
    if (!contains(v)) {
      bits_[v >> 6] |= uint64_t{1} << (v & 63);
      ++count_;
    }
  }
  void remove(int v) {
    if (contains(v)) {
      bits_[v >> 6] &= ~(uint64_t{1} << (v & 63));
      --count_;
    }
  }
  bool contains(int v) const {
    return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63)) & 1;
  }
  int count() const { return count_; }
  int size_hint() const { return n_; }
  bool empty() const { return count_ == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  bool intersects(const VertexSet& o) const {
    size_t w = std::min(bits_.size(), o.bits_.size());
    for (size_t i = 0; i < w; ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  const std::vector<uint64_t>& words() const { return bits_; }

 private:
  int n_ = 0;
  int count_ = 0;
  std::vector<uint64_t> bits_;
};

/// Edge-ownership state of K_n with per-player degree tables and
/// per-player adjacency bitsets for O(n/64) set-degree queries.
class Board {
 public:
  explicit Board(int n);

  int n() const { return n_; }
  int total_edges() const { return n_ * (n_ - 1) / 2; }
  int claimed_count() const { return claimed_; }
  int claimed_count(Player p) const { return claimed_by_[static_cast<int>(p)]; }

  Ownership ownership(Edge e) const { return own_[index(e)]; }
  bool is_free(Edge e) const { return ownership(e) == Ownership::Free; }
  bool owns(Player p, Edge e) const { return ownership(e) == to_ownership(p); }
  bool adjacent(Player p, int u, int v) const {
    return u != v && (row(p, u)[v >> 6] >> (v & 63)) & 1;
  }

  /// Claims a free edge for a player. Throws GameError on an already
  /// claimed edge or out-of-range vertex; the referee converts such a
  /// throw from a strategy into a forfeit.
  void claim(Player p, Edge e);

  int degree(Player p, int v) const { return deg_[static_cast<int>(p)][v]; }

  /// d_P(v, S): neighbors of v owned by p inside S. v itself is never counted.
  int degree_into(Player p, int v, const VertexSet& S) const;
  int degree_into(Player p, int v, std::span<const int> S) const;

  /// All free edges with one endpoint in S and one in T, sorted.
  /// Throws GameError when the sets overlap.
  std::vector<Edge> free_edges_between(std::span<const int> S,
                                       std::span<const int> T) const;

  std::vector<Edge> edges_of(Player p) const;
  std::vector<Edge> free_edges() const;
  int free_count() const { return total_edges() - claimed_; }

  const std::vector<uint64_t>& adjacency_row(Player p, int v) const {
    return rows_[static_cast<int>(p)][v];
  }

  /// Full recount of the degree tables against the ownership map; used
  /// by the audit in instrumented runs.
  bool degrees_consistent() const;

 private:
  size_t index(Edge e) const;
  const std::vector<uint64_t>& row(Player p, int v) const {
    return rows_[static_cast<int>(p)][v];
  }

  int n_;
  int claimed_ = 0;
  int claimed_by_[2] = {0, 0};
  std::vector<Ownership> own_;
  std::vector<int> deg_[2];
  std::vector<std::vector<uint64_t>> rows_[2];
};

}  // namespace posgames
