#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "posgames/board.hpp"

namespace posgames {

/// Numeric thresholds used by the k-connectivity strategies. The "paper"
/// profile uses the asymptotic constants; the "desk" profile scales them
/// so that every branch is reachable at testable n.
struct GameConstants {
  std::string profile;       // "paper" or "desk"
  double danger_fraction;    // cross-part Breaker density that marks a pair
  int stage1_move_cap;       // forfeit bound for Stage I
  long long global_move_cap; // forfeit bound for the whole game
  long long degree_danger_threshold;  // Breaker degree that marks a vertex
  int b_set_lower;           // reserved-set size window
  int b_set_upper;
  double matching_eps;       // epsilon handed to the matching subgames
  long long matching_d;      // danger threshold inside matching subgames

  static GameConstants paper(int k, int n) {
    GameConstants c;
    c.profile = "paper";
    c.danger_fraction = 0.9;
    c.stage1_move_cap = 2 * n;
    c.global_move_cap = static_cast<long long>(k) * n;
    long long k10 = 1;
    for (int i = 0; i < 10; ++i) k10 *= k;
    c.degree_danger_threshold = k10;
    long long k6 = 1;
    for (int i = 0; i < 6; ++i) k6 *= k;
    c.b_set_lower = static_cast<int>(n / k6);
    c.b_set_upper = static_cast<int>(2 * n / k6);
    c.matching_eps = 1.0 / (static_cast<double>(k) * k * k * k);
    c.matching_d = 2 * k10;
    return c;
  }

  static GameConstants desk(int k, int n) {
    GameConstants c;
    c.profile = "desk";
    c.danger_fraction = 0.6;
    c.stage1_move_cap = 2 * n;
    c.global_move_cap = static_cast<long long>(k) * n;
    c.degree_danger_threshold = std::max(8, 3 * k);
    int kk = (k - 1) * (k - 1);
    c.b_set_lower = (n + 8 * kk - 1) / (8 * kk);
    c.b_set_upper = (n + 4 * kk - 1) / (4 * kk);
    c.matching_eps = 0.1;
    c.matching_d = 2 * c.degree_danger_threshold;
    return c;
  }

  static GameConstants from_profile(const std::string& profile, int k, int n) {
    if (profile == "paper") return paper(k, n);
    if (profile == "desk") return desk(k, n);
    throw GameError("unknown constants profile: " + profile);
  }
};

}  // namespace posgames
