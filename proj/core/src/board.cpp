#include "posgames/board.hpp"

#include <algorithm>
#include <bit>

namespace posgames {

Board::Board(int n) : n_(n) {
  if (n < 2) throw GameError("Board: need at least 2 vertices");
  own_.assign(static_cast<size_t>(n) * n, Ownership::Free);
  size_t words = (n + 63) / 64;
  for (int p = 0; p < 2; ++p) {
    deg_[p].assign(n, 0);
    rows_[p].assign(n, std::vector<uint64_t>(words, 0));
  }
}

size_t Board::index(Edge e) const {
  if (e.v >= n_ || e.u < 0) throw GameError("Board: vertex out of range");
  return static_cast<size_t>(e.u) * n_ + e.v;
}

void Board::claim(Player p, Edge e) {
  size_t idx = index(e);
  if (own_[idx] != Ownership::Free)
    throw GameError("Board: edge already claimed");
  own_[idx] = to_ownership(p);
  int pi = static_cast<int>(p);
  ++deg_[pi][e.u];
  ++deg_[pi][e.v];
  rows_[pi][e.u][e.v >> 6] |= uint64_t{1} << (e.v & 63);
  rows_[pi][e.v][e.u >> 6] |= uint64_t{1} << (e.u & 63);
  ++claimed_;
  ++claimed_by_[pi];
}

int Board::degree_into(Player p, int v, const VertexSet& S) const {
  const auto& r = row(p, v);
  const auto& s = S.words();
  size_t w = std::min(r.size(), s.size());
  int count = 0;
  // v never appears in its own adjacency row, so v in S is harmless.
  for (size_t i = 0; i < w; ++i) count += std::popcount(r[i] & s[i]);
  return count;
}

int Board::degree_into(Player p, int v, std::span<const int> S) const {
  int count = 0;
  for (int u : S)
    if (u != v && adjacent(p, v, u)) ++count;
  return count;
}

std::vector<Edge> Board::free_edges_between(std::span<const int> S,
                                            std::span<const int> T) const {
  VertexSet s(n_, S), t(n_, T);
  if (s.intersects(t)) throw GameError("free_edges_between: overlapping sets");
  std::vector<Edge> out;
  for (int u : S)
    for (int v : T)
      if (is_free(Edge(u, v))) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Board::edges_of(Player p) const {
  std::vector<Edge> out;
  Ownership o = to_ownership(p);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (own_[static_cast<size_t>(u) * n_ + v] == o) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> Board::free_edges() const {
  std::vector<Edge> out;
  out.reserve(free_count());
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (own_[static_cast<size_t>(u) * n_ + v] == Ownership::Free)
        out.emplace_back(u, v);
  return out;
}

bool Board::degrees_consistent() const {
  std::vector<int> recount[2] = {std::vector<int>(n_, 0),
                                 std::vector<int>(n_, 0)};
  int claimed = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      Ownership o = own_[static_cast<size_t>(u) * n_ + v];
      if (o == Ownership::Free) continue;
      ++claimed;
      int p = (o == Ownership::PlayerOne) ? 0 : 1;
      ++recount[p][u];
      ++recount[p][v];
    }
  if (claimed != claimed_) return false;
  for (int p = 0; p < 2; ++p)
    for (int v = 0; v < n_; ++v)
      if (recount[p][v] != deg_[p][v]) return false;
  return true;
}

}  // namespace posgames
