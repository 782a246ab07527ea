#pragma once

#include <memory>
#include <string>

#include "posgames/adversary.hpp"
#include "posgames/engine.hpp"

namespace posgames {

/// One fully specified game run: variant, board size, constants profile,
/// and the opposing strategy.
struct RunConfig {
  Variant variant = Variant::WeakKConn;
  int n = 0;
  int k = 3;
  int m = 1;
  std::string profile = "desk";
  AdversarySettings adversary;
  uint64_t seed = 0;  // seeds the game graph and the adversary
};

struct RunResult {
  Transcript transcript;
  long long bound = 0;  // variant move bound for the protagonist
  bool within_bound = false;
  /// The protagonist strategy after the game, for certificate and
  /// instrumentation queries.
  std::shared_ptr<EdgeStrategy> protagonist;
};

GameSpec game_spec_for(const RunConfig& cfg);

/// Move bound for the protagonist: floor(kn/2)+1 for the connectivity
/// games, floor(n/2)+1 for the min-degree games, n-1 for spanning
/// connectivity.
long long variant_move_bound(const GameSpec& spec);

/// Build the protagonist for the variant (Maker or Red, Player::One).
std::shared_ptr<EdgeStrategy> make_protagonist(const RunConfig& cfg);

/// Run one game end to end, attaching certificates to the transcript.
RunResult run_single(const RunConfig& cfg,
                     const MoveObserver* observer = nullptr);

}  // namespace posgames
