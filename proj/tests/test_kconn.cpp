#include "doctest.h"
#include "json.hpp"
#include "posgames/driver.hpp"
#include "posgames/kconn_strong.hpp"
#include "posgames/kconn_weak.hpp"

using namespace posgames;
using nlohmann::json;

namespace {

RunConfig kconn_cfg(Variant v, int k, int n, AdversaryKind adv, uint64_t seed) {
  RunConfig cfg;
  cfg.variant = v;
  cfg.k = k;
  cfg.n = n;
  cfg.adversary.kind = adv;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("weak k-connectivity run end to end") {
  RunResult res =
      run_single(kconn_cfg(Variant::WeakKConn, 3, 60, AdversaryKind::Random, 1));
  const Transcript& t = res.transcript;
  CHECK(t.result.winner == "maker");
  CHECK(t.result.forfeit.empty());
  CHECK(res.within_bound);
  CHECK(t.result.mover_moves <= 3 * 60 / 2 + 1);

  json certs = json::parse(t.certificates_json);
  CHECK(certs["connectivity"].get<int>() >= 3);
  CHECK(certs["gk"]["all_pass"].get<bool>());
}

TEST_CASE("stage reports carry the per-stage bound checks") {
  // Drive the strategy all the way to Done (the referee would normally
  // stop at the first k-connected position).
  RunConfig cfg = kconn_cfg(Variant::WeakKConn, 3, 60, AdversaryKind::Random, 2);
  GameSpec spec = game_spec_for(cfg);
  auto prot = make_protagonist(cfg);
  auto* weak = dynamic_cast<KConnWeakStrategy*>(prot.get());
  REQUIRE(weak != nullptr);
  AdversaryContext ctx;
  ctx.n = cfg.n;
  ctx.k = cfg.k;
  ctx.partition = weak->partition();
  AdversarySettings settings;
  settings.seed = cfg.seed;
  auto breaker = make_adversary(settings, ctx, Player::Two);
  TranscriptHeader h;
  h.variant = "weak-kconn";
  h.n = cfg.n;
  h.k = cfg.k;
  h.strategies = {breaker->name(), weak->name()};
  WinPredicate done_pred = [&](const SimpleGraph&) { return weak->done(); };
  Transcript t = run_weak_game(spec, *prot, *breaker, std::move(h), &done_pred);
  CHECK(t.result.winner == "maker");
  CHECK(weak->done());
  REQUIRE(!weak->stage_reports().empty());
  for (const auto& report : weak->stage_reports())
    for (const auto& check : report.checks) {
      INFO(report.stage << " / " << check.name << ": " << check.measured
                        << " vs " << check.bound);
      CHECK(check.pass);
    }
}

TEST_CASE("degree cap audit is clean at game end") {
  RunConfig cfg =
      kconn_cfg(Variant::WeakKConn, 4, 60, AdversaryKind::GreedyDegree, 3);
  RunResult res = run_single(cfg);
  CHECK(res.transcript.result.winner == "maker");
  auto* weak = dynamic_cast<KConnWeakStrategy*>(res.protagonist.get());
  REQUIRE(weak != nullptr);
  // One chord per part, endpoints pairwise distinct.
  CHECK(weak->chord_endpoints().count() == 2 * (cfg.k - 1));
}

TEST_CASE("strong game with odd kn mirrors the weak strategy") {
  const int k = 3, n = 61;
  uint64_t seed = 5;

  RunConfig strong_cfg =
      kconn_cfg(Variant::StrongKConn, k, n, AdversaryKind::Random, seed);
  Transcript strong_t = run_single(strong_cfg).transcript;
  CHECK(strong_t.result.winner == "red");

  // Weak mirror: same opponent seed, Maker moving first to match Red.
  RunConfig weak_cfg =
      kconn_cfg(Variant::WeakKConn, k, n, AdversaryKind::Random, seed);
  GameSpec spec = game_spec_for(weak_cfg);
  spec.maker_first = true;
  auto maker = make_protagonist(weak_cfg);
  AdversaryContext ctx;
  ctx.n = n;
  ctx.k = k;
  ctx.partition = dynamic_cast<KConnWeakStrategy*>(maker.get())->partition();
  AdversarySettings settings;
  settings.kind = AdversaryKind::Random;
  settings.seed = seed;
  auto breaker = make_adversary(settings, ctx, Player::Two);
  TranscriptHeader header;
  header.variant = "weak-kconn";
  header.n = n;
  header.k = k;
  header.strategies = {maker->name(), breaker->name()};
  Transcript weak_t = run_weak_game(spec, *maker, *breaker, header);

  REQUIRE(weak_t.moves.size() >= strong_t.moves.size());
  for (size_t i = 0; i < strong_t.moves.size(); ++i) {
    CHECK(strong_t.moves[i].edge == weak_t.moves[i].edge);
    // R maps to M, B to B.
    std::string mapped = strong_t.moves[i].player == "R" ? "M" : "B";
    CHECK(mapped == weak_t.moves[i].player);
  }
}

TEST_CASE("strong game with even kn wins before blue") {
  RunConfig cfg = kconn_cfg(Variant::StrongKConn, 3, 60, AdversaryKind::Racer, 8);
  RunResult res = run_single(cfg);
  CHECK(res.transcript.result.winner == "red");
  CHECK(res.within_bound);
  json certs = json::parse(res.transcript.certificates_json);
  CHECK(certs["connectivity"].get<int>() >= 3);
  Board final_board = replay(res.transcript);
  CHECK(!is_k_connected(SimpleGraph::of_player(final_board, Player::Two), 3));
}

TEST_CASE("player_k_connected matches the graph predicate") {
  Board b(5);
  for (int v = 1; v < 5; ++v) b.claim(Player::One, Edge(0, v));
  CHECK(player_k_connected(b, Player::One, 1));
  CHECK(!player_k_connected(b, Player::One, 2));
  CHECK(!player_k_connected(b, Player::Two, 1));
}
