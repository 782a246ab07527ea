#include <random>

#include "doctest.h"
#include "posgames/driver.hpp"
#include "posgames/engine.hpp"

using namespace posgames;

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::WeakKConn, Variant::StrongKConn,
                    Variant::WeakMinDeg, Variant::StrongMinDeg,
                    Variant::MatchingSubgame, Variant::HCChordSubgame,
                    Variant::WeakConn1})
    CHECK(variant_from_string(variant_name(v)) == v);
  CHECK_THROWS_AS(variant_from_string("tic-tac-toe"), GameError);
}

TEST_CASE("transcript JSON round-trips and hashes stably") {
  RunConfig cfg;
  cfg.variant = Variant::WeakMinDeg;
  cfg.n = 24;
  cfg.seed = 42;
  RunResult res = run_single(cfg);
  const Transcript& t = res.transcript;
  CHECK(t.result.winner == "maker");

  std::string compact = to_json_string(t);
  std::string pretty = to_json_string(t, 2);
  CHECK(compact.size() < pretty.size());
  Transcript back = transcript_from_json_string(pretty);
  CHECK(to_json_string(back) == compact);
  CHECK(transcript_hash(back) == transcript_hash(t));
  CHECK(back.header.seed == 42);
  CHECK(back.moves.size() == t.moves.size());
  CHECK(back.result.win_move == t.result.win_move);
}

TEST_CASE("replay reproduces the final position and rejects corruption") {
  RunConfig cfg;
  cfg.variant = Variant::WeakMinDeg;
  cfg.n = 20;
  cfg.seed = 7;
  Transcript t = run_single(cfg).transcript;
  Board board = replay(t);
  int one = 0, two = 0;
  for (const auto& mv : t.moves) (mv.player == "M" ? one : two) += 1;
  CHECK(board.claimed_count(Player::One) == one);
  CHECK(board.claimed_count(Player::Two) == two);

  Transcript bad = t;
  bad.moves.push_back(bad.moves.front());  // duplicate claim
  CHECK_THROWS_AS(replay(bad), GameError);
}

TEST_CASE("identical configs give identical transcripts") {
  for (Variant v : {Variant::WeakMinDeg, Variant::StrongMinDeg}) {
    RunConfig cfg;
    cfg.variant = v;
    cfg.n = 30;
    cfg.seed = 99;
    uint64_t h1 = transcript_hash(run_single(cfg).transcript);
    uint64_t h2 = transcript_hash(run_single(cfg).transcript);
    CHECK(h1 == h2);
  }
}

TEST_CASE("seeds actually vary the play") {
  RunConfig a, b;
  a.variant = b.variant = Variant::WeakMinDeg;
  a.n = b.n = 30;
  a.seed = 1;
  b.seed = 2;
  CHECK(transcript_hash(run_single(a).transcript) !=
        transcript_hash(run_single(b).transcript));
}

TEST_CASE("referee converts an illegal claim into a forfeit") {
  struct Cheater : EdgeStrategy {
    StrategyOutcome next_move(const Board&, std::optional<Edge>) override {
      return StrategyOutcome::claim(Edge(0, 1));  // eventually taken
    }
    std::string name() const override { return "cheater"; }
  };
  struct Grabber : EdgeStrategy {
    StrategyOutcome next_move(const Board& b, std::optional<Edge>) override {
      if (b.is_free(Edge(0, 1))) return StrategyOutcome::claim(Edge(0, 1));
      return StrategyOutcome::claim(Edge(2, 3));
    }
    std::string name() const override { return "grabber"; }
  };
  GameSpec spec;
  spec.variant = Variant::WeakMinDeg;
  spec.n = 6;
  Cheater maker;
  Grabber breaker;
  TranscriptHeader h;
  h.variant = "weak-mindeg";
  h.n = 6;
  h.strategies = {"grabber", "cheater"};
  Transcript t = run_weak_game(spec, maker, breaker, h);
  CHECK(t.result.winner == "breaker");
  CHECK(t.result.forfeit.find("illegal move") != std::string::npos);
}

TEST_CASE("move observer sees every applied claim") {
  RunConfig cfg;
  cfg.variant = Variant::WeakMinDeg;
  cfg.n = 16;
  cfg.seed = 3;
  int seen = 0;
  MoveObserver obs = [&](const Board& b, const MoveRecord& mv) {
    ++seen;
    CHECK(mv.i == seen);
    CHECK(!b.is_free(mv.edge));
  };
  Transcript t = run_single(cfg, &obs).transcript;
  CHECK(seen == (int)t.moves.size());
  CHECK(t.audit_failures.empty());
}
