#include <benchmark/benchmark.h>

#include "posgames/board.hpp"
#include "posgames/driver.hpp"
#include "posgames/graph.hpp"

using namespace posgames;

static void BM_BoardClaim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Board board(n);
    Player p = Player::One;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        board.claim(p, Edge(u, v));
        p = other(p);
      }
    benchmark::DoNotOptimize(board.degree(Player::One, 0));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t)n * (n - 1) / 2);
}
BENCHMARK(BM_BoardClaim)->Arg(60)->Arg(200);

static void BM_VertexConnectivity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SimpleGraph g = dense_game_graph(n, 3, 7);
  for (auto _ : state) {
    auto rep = vertex_connectivity(g);
    benchmark::DoNotOptimize(rep.connectivity);
  }
}
BENCHMARK(BM_VertexConnectivity)->Arg(40)->Arg(80);

static void BM_WeakKConnGame(benchmark::State& state) {
  RunConfig cfg;
  cfg.variant = Variant::WeakKConn;
  cfg.n = static_cast<int>(state.range(0));
  cfg.k = 3;
  cfg.adversary.kind = AdversaryKind::Random;
  for (auto _ : state) {
    cfg.seed = state.iterations();
    RunResult r = run_single(cfg);
    benchmark::DoNotOptimize(r.transcript.result.mover_moves);
  }
}
BENCHMARK(BM_WeakKConnGame)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_WeakMinDegGame(benchmark::State& state) {
  RunConfig cfg;
  cfg.variant = Variant::WeakMinDeg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.m = 2;
  cfg.adversary.kind = AdversaryKind::Random;
  for (auto _ : state) {
    cfg.seed = state.iterations();
    RunResult r = run_single(cfg);
    benchmark::DoNotOptimize(r.transcript.result.mover_moves);
  }
}
BENCHMARK(BM_WeakMinDegGame)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
