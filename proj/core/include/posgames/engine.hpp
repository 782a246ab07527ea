#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posgames/constants.hpp"
#include "posgames/solver.hpp"
#include "posgames/strategy.hpp"

namespace posgames {

enum class Variant {
  WeakKConn,
  StrongKConn,
  WeakMinDeg,
  StrongMinDeg,
  MatchingSubgame,
  HCChordSubgame,
  WeakConn1,
};

std::string variant_name(Variant v);
Variant variant_from_string(const std::string& s);

struct GameSpec {
  Variant variant = Variant::WeakKConn;
  int n = 0;
  int k = 0;  // connectivity target; 0 for the min-degree variants
  int m = 1;  // density parameter of the min-degree game graph
  GameConstants constants;
  bool maker_first = false;  // weak games default to Breaker first
};

struct TranscriptHeader {
  std::string variant;
  int n = 0;
  int k = 0;
  int m = 0;
  std::string profile;
  uint64_t seed = 0;
  std::vector<std::string> strategies;  // first mover's name, then second's
};

struct MoveRecord {
  int i = 0;               // 1-based global move index
  std::string player;      // "M"/"B" weak, "R"/"B" strong
  Edge edge{0, 1};
  std::string stage;
};

struct GameResult {
  std::string winner = "none";  // maker/breaker/none or red/blue/draw
  int win_move = -1;
  int mover_moves = 0;  // claims by the protagonist (Maker or Red)
  std::string forfeit;  // empty unless a strategy forfeited
};

struct Transcript {
  TranscriptHeader header;
  std::vector<MoveRecord> moves;
  GameResult result;
  std::string certificates_json = "{}";  // serialized certificates object
  std::vector<std::string> audit_failures;  // engine-side, not serialized
};

/// Serialize to the fixed transcript schema. indent < 0 emits compact JSON.
std::string to_json_string(const Transcript& t, int indent = -1);
Transcript transcript_from_json_string(const std::string& text);

/// FNV-1a over the compact serialization; the determinism fingerprint.
uint64_t transcript_hash(const Transcript& t);

/// Winning-set test for the standard variants. The subgame variants need
/// a caller-supplied predicate.
WinPredicate win_predicate_for(const GameSpec& spec);

/// Invoked after every applied claim with the updated board; used by the
/// test harnesses for per-move instrumentation.
using MoveObserver = std::function<void(const Board&, const MoveRecord&)>;

/// Game graph for the min-degree variants: K_n minus m-1 seeded random
/// near-perfect matchings, so the minimum degree is at least n-m.
SimpleGraph dense_game_graph(int n, int m, uint64_t seed);

/// Referee a Maker-Breaker game. Breaker moves first unless
/// spec.maker_first. The win predicate is evaluated on Maker's graph
/// after each Maker claim (cheap degree prefilters live inside the
/// predicates). Every tenth move the board's degree caches are recounted;
/// discrepancies land in audit_failures.
Transcript run_weak_game(const GameSpec& spec, EdgeStrategy& maker,
                         EdgeStrategy& breaker, TranscriptHeader header,
                         const WinPredicate* custom = nullptr,
                         const MoveObserver* observer = nullptr);

/// Referee a strong game. Red moves first; the mover's graph is tested
/// after every claim and the first completed winning set ends the game.
Transcript run_strong_game(const GameSpec& spec, EdgeStrategy& red,
                           EdgeStrategy& blue, TranscriptHeader header,
                           const WinPredicate* custom = nullptr,
                           const MoveObserver* observer = nullptr);

/// Re-apply a transcript's moves to a fresh board, re-checking legality.
/// Returns the final board; throws GameError on any illegal claim.
Board replay(const Transcript& t);

}  // namespace posgames
