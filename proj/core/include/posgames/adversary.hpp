#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "posgames/gk_family.hpp"
#include "posgames/solver.hpp"
#include "posgames/strategy.hpp"

namespace posgames {

enum class AdversaryKind {
  Random,
  GreedyDegree,
  CutAttacker,
  DangerForger,
  Racer,
  Minimax,
  Scripted,
};

AdversaryKind adversary_kind_from_string(const std::string& s);
std::string to_string(AdversaryKind kind);

/// Shared context for adversary decisions; only the fields relevant to a
/// given kind are consulted.
struct AdversaryContext {
  int n = 0;
  int k = 0;  // connectivity target, 0 for pure min-degree games
  int m = 1;  // degree target for min-degree games
  std::optional<Partition> partition;  // for CutAttacker
  WinPredicate own_target;             // for Racer / Minimax (strong)
  bool strong = false;
};

struct AdversarySettings {
  AdversaryKind kind = AdversaryKind::Random;
  uint64_t seed = 0;
  std::vector<Edge> script;  // for Scripted
};

std::unique_ptr<EdgeStrategy> make_adversary(const AdversarySettings& settings,
                                             const AdversaryContext& ctx,
                                             Player self);

}  // namespace posgames
