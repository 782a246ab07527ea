#include "posgames/engine.hpp"

#include <algorithm>
#include <fmt/core.h>
#include <random>

#include "json.hpp"

namespace posgames {

using nlohmann::json;

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::WeakKConn: return "weak-kconn";
    case Variant::StrongKConn: return "strong-kconn";
    case Variant::WeakMinDeg: return "weak-mindeg";
    case Variant::StrongMinDeg: return "strong-mindeg";
    case Variant::MatchingSubgame: return "matching";
    case Variant::HCChordSubgame: return "hc-chord";
    case Variant::WeakConn1: return "weak-conn1";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "weak-kconn") return Variant::WeakKConn;
  if (s == "strong-kconn") return Variant::StrongKConn;
  if (s == "weak-mindeg") return Variant::WeakMinDeg;
  if (s == "strong-mindeg") return Variant::StrongMinDeg;
  if (s == "matching") return Variant::MatchingSubgame;
  if (s == "hc-chord") return Variant::HCChordSubgame;
  if (s == "weak-conn1") return Variant::WeakConn1;
  throw GameError("unknown variant: " + s);
}

WinPredicate win_predicate_for(const GameSpec& spec) {
  switch (spec.variant) {
    case Variant::WeakKConn:
    case Variant::StrongKConn:
      return kconn_predicate(spec.k);
    case Variant::WeakConn1:
      return kconn_predicate(1);
    case Variant::WeakMinDeg:
    case Variant::StrongMinDeg:
      return mindeg_predicate(1);
    case Variant::MatchingSubgame:
    case Variant::HCChordSubgame:
      break;
  }
  throw GameError("variant " + variant_name(spec.variant) +
                  " needs a caller-supplied win predicate");
}

SimpleGraph dense_game_graph(int n, int m, uint64_t seed) {
  SimpleGraph g = SimpleGraph::complete(n);
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  for (int round = 1; round < m; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i + 1 < n; i += 2) g.remove_edge(perm[i], perm[i + 1]);
  }
  return g;
}

namespace {

json header_json(const TranscriptHeader& h) {
  return json{{"variant", h.variant}, {"n", h.n},         {"k", h.k},
              {"m", h.m},             {"profile", h.profile},
              {"seed", h.seed},       {"strategies", h.strategies}};
}

struct Referee {
  const GameSpec& spec;
  Transcript t;
  Board board;
  int index = 0;
  const MoveObserver* observer = nullptr;

  Referee(const GameSpec& s, TranscriptHeader header, const MoveObserver* obs)
      : spec(s), board(s.n), observer(obs) {
    t.header = std::move(header);
  }

  /// Applies one strategy turn. Returns false when the game is over.
  bool step(EdgeStrategy& strat, Player p, const char* tag,
            std::optional<Edge> last, const char* opponent_name) {
    auto out = strat.next_move(board, last);
    if (out.kind == StrategyOutcome::Kind::Pass) return true;
    if (out.is_forfeit()) {
      t.result.forfeit = std::string(tag) + ": " + out.reason;
      t.result.winner = opponent_name;
      return false;
    }
    ++index;
    try {
      board.claim(p, *out.edge);
    } catch (const GameError& err) {
      t.result.forfeit =
          fmt::format("{}: illegal move {}-{}: {}", tag, out.edge->u,
                      out.edge->v, err.what());
      t.result.winner = opponent_name;
      return false;
    }
    t.moves.push_back({index, tag, *out.edge, strat.stage_label()});
    if (index % 10 == 0 && !board.degrees_consistent())
      t.audit_failures.push_back(
          fmt::format("degree recount mismatch at move {}", index));
    if (observer && *observer) (*observer)(board, t.moves.back());
    return true;
  }
};

}  // namespace

Transcript run_weak_game(const GameSpec& spec, EdgeStrategy& maker,
                         EdgeStrategy& breaker, TranscriptHeader header,
                         const WinPredicate* custom,
                         const MoveObserver* observer) {
  WinPredicate pred = custom ? *custom : win_predicate_for(spec);
  Referee ref(spec, std::move(header), observer);
  std::optional<Edge> last_maker, last_breaker;
  bool maker_turn = spec.maker_first;
  int passes = 0;
  long long cap = static_cast<long long>(spec.n) * spec.n;

  while (passes < 2 && ref.index < cap) {
    size_t before = ref.t.moves.size();
    if (maker_turn) {
      if (!ref.step(maker, Player::One, "M", last_breaker, "breaker")) break;
      if (ref.t.moves.size() > before) {
        passes = 0;
        last_maker = ref.t.moves.back().edge;
        ++ref.t.result.mover_moves;
        if (pred(SimpleGraph::of_player(ref.board, Player::One))) {
          ref.t.result.winner = "maker";
          ref.t.result.win_move = ref.index;
          break;
        }
      } else {
        // Maker passed: either it believes the target is met, or it has
        // nothing left to do. Adjudicate now.
        if (ref.t.result.winner == "none" &&
            pred(SimpleGraph::of_player(ref.board, Player::One))) {
          ref.t.result.winner = "maker";
          ref.t.result.win_move = ref.index;
        }
        ++passes;
        if (passes >= 2 || ref.t.result.winner == "maker") break;
      }
    } else {
      if (!ref.step(breaker, Player::Two, "B", last_maker, "maker")) break;
      if (ref.t.moves.size() > before) {
        passes = 0;
        last_breaker = ref.t.moves.back().edge;
      } else {
        ++passes;
      }
    }
    maker_turn = !maker_turn;
  }
  if (ref.t.result.winner == "none" && ref.t.result.forfeit.empty())
    ref.t.result.winner = "breaker";
  if (ref.t.result.winner == "maker" && ref.t.result.forfeit.empty() &&
      ref.t.result.win_move < 0)
    ref.t.result.win_move = ref.index;
  return ref.t;
}

Transcript run_strong_game(const GameSpec& spec, EdgeStrategy& red,
                           EdgeStrategy& blue, TranscriptHeader header,
                           const WinPredicate* custom,
                           const MoveObserver* observer) {
  WinPredicate pred = custom ? *custom : win_predicate_for(spec);
  Referee ref(spec, std::move(header), observer);
  std::optional<Edge> last_red, last_blue;
  bool red_turn = true;
  int passes = 0;
  long long cap = static_cast<long long>(spec.n) * spec.n;

  while (passes < 2 && ref.index < cap) {
    size_t before = ref.t.moves.size();
    Player p = red_turn ? Player::One : Player::Two;
    EdgeStrategy& strat = red_turn ? red : blue;
    if (!ref.step(strat, p, red_turn ? "R" : "B",
                  red_turn ? last_blue : last_red,
                  red_turn ? "blue" : "red"))
      break;
    if (ref.t.moves.size() > before) {
      passes = 0;
      (red_turn ? last_red : last_blue) = ref.t.moves.back().edge;
      if (red_turn) ++ref.t.result.mover_moves;
      if (pred(SimpleGraph::of_player(ref.board, p))) {
        ref.t.result.winner = red_turn ? "red" : "blue";
        ref.t.result.win_move = ref.index;
        break;
      }
    } else {
      ++passes;
    }
    red_turn = !red_turn;
  }
  if (ref.t.result.winner == "none" && ref.t.result.forfeit.empty())
    ref.t.result.winner = "draw";
  return ref.t;
}

std::string to_json_string(const Transcript& t, int indent) {
  json moves = json::array();
  for (const auto& mv : t.moves)
    moves.push_back(json{{"i", mv.i},
                         {"player", mv.player},
                         {"edge", {mv.edge.u, mv.edge.v}},
                         {"stage", mv.stage}});
  json j{{"header", header_json(t.header)},
         {"moves", std::move(moves)},
         {"result",
          {{"winner", t.result.winner},
           {"win_move", t.result.win_move},
           {"mover_moves", t.result.mover_moves},
           {"forfeit", t.result.forfeit}}},
         {"certificates", json::parse(t.certificates_json)}};
  return indent < 0 ? j.dump() : j.dump(indent);
}

Transcript transcript_from_json_string(const std::string& text) {
  json j = json::parse(text);
  Transcript t;
  const auto& h = j.at("header");
  t.header.variant = h.at("variant").get<std::string>();
  t.header.n = h.at("n").get<int>();
  t.header.k = h.at("k").get<int>();
  t.header.m = h.at("m").get<int>();
  t.header.profile = h.at("profile").get<std::string>();
  t.header.seed = h.at("seed").get<uint64_t>();
  t.header.strategies = h.at("strategies").get<std::vector<std::string>>();
  for (const auto& mv : j.at("moves")) {
    MoveRecord r;
    r.i = mv.at("i").get<int>();
    r.player = mv.at("player").get<std::string>();
    r.edge = Edge(mv.at("edge").at(0).get<int>(), mv.at("edge").at(1).get<int>());
    r.stage = mv.at("stage").get<std::string>();
    t.moves.push_back(std::move(r));
  }
  const auto& res = j.at("result");
  t.result.winner = res.at("winner").get<std::string>();
  t.result.win_move = res.at("win_move").get<int>();
  t.result.mover_moves = res.at("mover_moves").get<int>();
  t.result.forfeit = res.at("forfeit").get<std::string>();
  t.certificates_json = j.at("certificates").dump();
  return t;
}

uint64_t transcript_hash(const Transcript& t) {
  std::string s = to_json_string(t);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Board replay(const Transcript& t) {
  Board board(t.header.n);
  int expect = 1;
  for (const auto& mv : t.moves) {
    if (mv.i != expect)
      throw GameError(fmt::format("replay: move index {} out of order", mv.i));
    Player p = (mv.player == "M" || mv.player == "R") ? Player::One
                                                      : Player::Two;
    board.claim(p, mv.edge);  // throws on any illegal claim
    ++expect;
  }
  return board;
}

}  // namespace posgames
