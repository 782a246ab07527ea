#pragma once

#include <optional>
#include <string>

#include "posgames/board.hpp"

namespace posgames {

/// A strategy's per-turn result: a chosen edge, a pass, or a forfeit.
struct StrategyOutcome {
  enum class Kind { Claim, Pass, Forfeit };

  Kind kind = Kind::Pass;
  std::optional<Edge> edge;
  std::string reason;

  static StrategyOutcome claim(Edge e) { return {Kind::Claim, e, {}}; }
  static StrategyOutcome pass() { return {Kind::Pass, {}, {}}; }
  static StrategyOutcome forfeit(std::string why) {
    return {Kind::Forfeit, {}, std::move(why)};
  }

  bool is_claim() const { return kind == Kind::Claim; }
  bool is_forfeit() const { return kind == Kind::Forfeit; }
};

/// Turn-based strategy over board edges. The engine passes the opponent's
/// previous edge (absent on the very first move of a first player).
class EdgeStrategy {
 public:
  virtual ~EdgeStrategy() = default;
  virtual StrategyOutcome next_move(const Board& board,
                                    std::optional<Edge> last_opponent_edge) = 0;
  virtual std::string name() const = 0;
  /// Annotation recorded per move in the transcript (stage pointer etc).
  virtual std::string stage_label() const { return {}; }
};

}  // namespace posgames
