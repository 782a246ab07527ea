// posgames: batch simulation, membership verification, tiny-board solving,
// and an interactive human-as-Breaker session, all over the core library.
//
// Exit codes: 0 success, 1 property/bound violation, 2 usage/parse error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "posgames/driver.hpp"
#include "posgames/gk_family.hpp"
#include "posgames/kconn_strong.hpp"
#include "posgames/kconn_weak.hpp"
#include "posgames/mindeg.hpp"
#include "posgames/solver.hpp"

namespace fs = std::filesystem;
using namespace posgames;

namespace {

std::string default_profile() {
  const char* env = std::getenv("POSGAME_PROFILE");
  return env && *env ? env : "desk";
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string variant = "weak-kconn";
  int n = 60;
  int k = 3;
  int m = 1;
  std::string adversary = "random";
  uint64_t seed = 1;
  int reps = 1;
  std::string profile = default_profile();
  std::string out_dir = "transcripts";
  bool strict = false;
  int jobs = 0;  // 0 = hardware concurrency
};

int cmd_simulate(const SimulateArgs& args) {
  RunConfig base;
  base.variant = variant_from_string(args.variant);
  base.n = args.n;
  base.k = args.k;
  base.m = args.m;
  base.profile = args.profile;
  base.adversary.kind = adversary_kind_from_string(args.adversary);

  fs::create_directories(args.out_dir);

  std::vector<RunResult> results(args.reps);
  std::vector<std::string> errors(args.reps);
  unsigned jobs = args.jobs > 0 ? static_cast<unsigned>(args.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(args.reps));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int r; (r = next.fetch_add(1)) < args.reps;) {
      RunConfig cfg = base;
      cfg.seed = args.seed + static_cast<uint64_t>(r);
      try {
        results[r] = run_single(cfg);
      } catch (const std::exception& ex) {
        errors[r] = ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int wins = 0, forfeits = 0, over_bound = 0;
  int max_moves = 0, min_moves = 1 << 30;
  long long bound = 0;
  fmt::print("{:>6} {:>8} {:>7} {:>6} {:>9}  {}\n", "seed", "winner", "moves",
             "bound", "within", "notes");
  for (int r = 0; r < args.reps; ++r) {
    if (!errors[r].empty()) {
      fmt::print("{:>6} {:>8} {:>7} {:>6} {:>9}  {}\n",
                 args.seed + static_cast<uint64_t>(r), "error", "-", "-", "-",
                 errors[r]);
      ++forfeits;
      continue;
    }
    const RunResult& res = results[r];
    const Transcript& t = res.transcript;
    bound = res.bound;
    bool won = t.result.winner == "maker" || t.result.winner == "red";
    if (won) ++wins;
    if (!t.result.forfeit.empty()) ++forfeits;
    if (won && t.result.mover_moves > res.bound) ++over_bound;
    max_moves = std::max(max_moves, t.result.mover_moves);
    min_moves = std::min(min_moves, t.result.mover_moves);
    fmt::print("{:>6} {:>8} {:>7} {:>6} {:>9}  {}\n", t.header.seed,
               t.result.winner, t.result.mover_moves, res.bound,
               res.within_bound ? "yes" : "no", t.result.forfeit);
    fs::path file = fs::path(args.out_dir) /
                    fmt::format("{}-n{}-{}.json", args.variant, args.n,
                                t.header.seed);
    std::ofstream(file) << to_json_string(t, 2) << '\n';
  }
  fmt::print("\n{} runs: {} wins, {} forfeits, moves {}..{}, bound {}\n",
             args.reps, wins, forfeits, args.reps ? min_moves : 0, max_moves,
             bound);
  if (over_bound > 0 || wins + forfeits < args.reps) return 1;
  if (args.strict && forfeits > 0) return 1;
  return wins == args.reps ? 0 : 1;
}

// --------------------------------------------------------------- verify-gk

struct ParseErrorAt {
  int line;
  std::string what;
};

SimpleGraph parse_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseErrorAt{0, "cannot open " + path};
  std::string line;
  int lineno = 0, n = -1;
  SimpleGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      if (!(ss >> n) || n < 1)
        throw ParseErrorAt{lineno, "expected vertex count on first line"};
      std::string rest;
      if (ss >> rest) throw ParseErrorAt{lineno, "trailing tokens after n"};
      g = SimpleGraph(n);
      continue;
    }
    int u, v;
    if (!(ss >> u >> v)) throw ParseErrorAt{lineno, "expected \"u v\""};
    std::string rest;
    if (ss >> rest) throw ParseErrorAt{lineno, "trailing tokens after edge"};
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseErrorAt{lineno, fmt::format("vertex out of range: {} {}", u, v)};
    if (u == v) throw ParseErrorAt{lineno, fmt::format("self-loop at {}", u)};
    if (g.has_edge(u, v))
      throw ParseErrorAt{lineno, fmt::format("duplicate edge {} {}", u, v)};
    g.add_edge(u, v);
  }
  if (n < 0) throw ParseErrorAt{lineno, "empty file"};
  return g;
}

// Backtracking Hamilton cycle search within one part; parts here are small.
std::vector<int> find_part_cycle(const SimpleGraph& g,
                                 const std::vector<int>& part) {
  size_t s = part.size();
  if (s < 3) return {};
  std::vector<int> order{part[0]};
  std::vector<char> used(s, 0);
  used[0] = 1;
  auto rec = [&](auto&& self) -> bool {
    if (order.size() == s)
      return g.has_edge(order.back(), order.front());
    for (size_t i = 1; i < s; ++i) {
      if (used[i] || !g.has_edge(order.back(), part[i])) continue;
      used[i] = 1;
      order.push_back(part[i]);
      if (self(self)) return true;
      order.pop_back();
      used[i] = 0;
    }
    return false;
  };
  if (!rec(rec)) return {};
  return order;
}

int cmd_verify_gk(const std::string& path, int k,
                  const std::string& partition_spec) {
  SimpleGraph g;
  try {
    g = parse_edge_list(path);
  } catch (const ParseErrorAt& e) {
    fmt::print(stderr, "{}:{}: parse error: {}\n", path, e.line, e.what);
    return 2;
  }
  Partition p;
  try {
    p = partition_spec == "blocks" ? Partition::blocks(g.n(), k)
                                   : Partition::round_robin(g.n(), k);
  } catch (const GameError& e) {
    fmt::print(stderr, "partition error: {}\n", e.what());
    return 2;
  }
  std::vector<std::vector<int>> cycles;
  for (const auto& part : p.parts) {
    auto cyc = find_part_cycle(g, part);
    cycles.push_back(cyc.empty() ? part : cyc);  // fallback fails property (iii)
  }
  GkCertificate cert = verify_membership(g, p, k, cycles);

  static const char* names[6] = {
      "(i)   part sizes >= 5",        "(ii)  minimum degree >= k",
      "(iii) part hamilton cycles",   "(iv)  cross matchings >= 3",
      "(v)   <= 1 missed foreign part", "(vi)  lonely-vertex spacing"};
  for (int i = 0; i < 6; ++i)
    fmt::print("{:<34} {}{}\n", names[i],
               cert.properties[i].pass ? "pass" : "FAIL",
               cert.properties[i].pass ? ""
                                       : "  (" + cert.properties[i].witness + ")");
  CutReport cut = vertex_connectivity(g);
  fmt::print("vertex connectivity: {} (target {}): {}\n", cut.connectivity, k,
             cut.connectivity >= k ? "pass" : "FAIL");
  return cert.all_pass() && cut.connectivity >= k ? 0 : 1;
}

// -------------------------------------------------------------------- play

struct PlayArgs {
  std::string variant = "weak-mindeg";
  int n = 8;
  int k = 3;
  int m = 1;
  uint64_t seed = 1;
  std::string profile = default_profile();
  std::string out = "session.json";
};

void print_degree_summary(const Board& board, bool strong) {
  SimpleGraph mine = SimpleGraph::of_player(board, Player::One);
  SimpleGraph theirs = SimpleGraph::of_player(board, Player::Two);
  fmt::print("  degrees: min {}(us) {}({}), edges {} vs {}\n",
             mine.min_degree(), theirs.min_degree(), strong ? "blue" : "breaker",
             mine.edge_count(), theirs.edge_count());
}

int cmd_play(const PlayArgs& args) {
  RunConfig cfg;
  cfg.variant = variant_from_string(args.variant);
  cfg.n = args.n;
  cfg.k = args.k;
  cfg.m = args.m;
  cfg.profile = args.profile;
  cfg.seed = args.seed;
  GameSpec spec = game_spec_for(cfg);
  auto strategy = make_protagonist(cfg);
  WinPredicate pred = win_predicate_for(spec);
  bool strong = cfg.variant == Variant::StrongKConn ||
                cfg.variant == Variant::StrongMinDeg;

  Board board(args.n);
  Transcript t;
  t.header.variant = variant_name(cfg.variant);
  t.header.n = args.n;
  t.header.k = spec.k;
  t.header.m = args.m;
  t.header.profile = args.profile;
  t.header.seed = args.seed;
  t.header.strategies = strong
                            ? std::vector<std::string>{strategy->name(), "human"}
                            : std::vector<std::string>{"human", strategy->name()};

  fmt::print("{} on K_{}; you are {}. Enter edges as \"u v\", q to quit.\n",
             t.header.variant, args.n, strong ? "Blue" : "Breaker");

  auto record = [&](Player p, Edge e, const std::string& stage) {
    std::string who = strong ? (p == Player::One ? "R" : "B")
                             : (p == Player::One ? "M" : "B");
    t.moves.push_back({static_cast<int>(t.moves.size()) + 1, who, e, stage});
  };
  auto save = [&]() {
    std::ofstream(args.out) << to_json_string(t, 2) << '\n';
    fmt::print("transcript saved to {}\n", args.out);
  };

  std::optional<Edge> last_human;
  bool human_turn = !strong;  // Breaker opens weak games, Red opens strong ones
  std::string line;
  while (true) {
    if (human_turn) {
      fmt::print("your move> ");
      if (!std::getline(std::cin, line) || line == "q") {
        save();
        return 0;
      }
      std::istringstream ss(line);
      int u, v;
      if (!(ss >> u >> v)) {
        fmt::print("  enter two vertex numbers, e.g. \"0 1\"\n");
        continue;
      }
      if (u == v) {
        fmt::print("  rejected: self-loop\n");
        continue;
      }
      if (u < 0 || u >= args.n || v < 0 || v >= args.n) {
        fmt::print("  rejected: vertices must be in [0, {})\n", args.n);
        continue;
      }
      Edge e(u, v);
      if (!board.is_free(e)) {
        fmt::print("  rejected: {}-{} is already claimed\n", e.u, e.v);
        continue;
      }
      board.claim(Player::Two, e);
      record(Player::Two, e, "human");
      last_human = e;
      if (strong && pred(SimpleGraph::of_player(board, Player::Two))) {
        t.result.winner = "blue";
        t.result.win_move = static_cast<int>(t.moves.size());
        fmt::print("you completed a winning set first.\n");
        save();
        return 0;
      }
      human_turn = false;
      continue;
    }
    auto out = strategy->next_move(board, last_human);
    if (out.is_forfeit()) {
      t.result.winner = strong ? "blue" : "breaker";
      t.result.forfeit = out.reason;
      fmt::print("strategy forfeits: {}\n", out.reason);
      save();
      return 0;
    }
    if (out.is_claim()) {
      Edge e = *out.edge;
      board.claim(Player::One, e);
      ++t.result.mover_moves;
      record(Player::One, e, strategy->stage_label());
      fmt::print("engine claims {}-{}  [{}]\n", e.u, e.v,
                 strategy->stage_label());
      print_degree_summary(board, strong);
      if (pred(SimpleGraph::of_player(board, Player::One))) {
        t.result.winner = strong ? "red" : "maker";
        t.result.win_move = static_cast<int>(t.moves.size());
        fmt::print("engine completed its winning set in {} moves.\n",
                   t.result.mover_moves);
        save();
        return 0;
      }
    } else {
      if (pred(SimpleGraph::of_player(board, Player::One))) {
        t.result.winner = strong ? "red" : "maker";
        fmt::print("engine passes; its winning set is complete.\n");
      } else {
        fmt::print("engine passes.\n");
      }
      save();
      return 0;
    }
    if (board.free_count() == 0) {
      t.result.winner = strong ? "draw" : "breaker";
      fmt::print("board exhausted.\n");
      save();
      return 0;
    }
    human_turn = true;
  }
}

// ------------------------------------------------------------------- solve

int cmd_solve(const std::string& variant_s, int n) {
  Variant variant = variant_from_string(variant_s);
  if (n > WeakSolver::kMaxN) {
    fmt::print(stderr, "BoardTooLarge: full solve requires n <= {}\n",
               WeakSolver::kMaxN);
    return 2;
  }
  WinPredicate pred;
  switch (variant) {
    case Variant::WeakConn1:
      pred = kconn_predicate(1);
      break;
    case Variant::WeakMinDeg:
    case Variant::StrongMinDeg:
      pred = mindeg_predicate(1);
      break;
    case Variant::WeakKConn:
    case Variant::StrongKConn:
      pred = kconn_predicate(std::min(3, n - 1));
      break;
    default:
      fmt::print(stderr, "variant {} has no full-board solve\n", variant_s);
      return 2;
  }
  bool strong = variant == Variant::StrongKConn || variant == Variant::StrongMinDeg;
  if (strong) {
    StrongSolver solver(n, pred, Player::One);
    auto res = solver.solve_from_empty();
    const char* out = res.outcome == StrongSolver::Outcome::RedWin   ? "red win"
                      : res.outcome == StrongSolver::Outcome::Draw   ? "draw"
                                                                     : "blue win";
    fmt::print("{} on K_{}: {}", variant_s, n, out);
    if (res.outcome == StrongSolver::Outcome::RedWin)
      fmt::print(", optimal red moves {}", res.red_moves);
    fmt::print("\n");
  } else {
    WeakSolver solver(n, pred, Player::One);
    auto res = solver.solve_from_empty();
    if (res.maker_wins)
      fmt::print("{} on K_{}: maker win, optimal {} moves\n", variant_s, n,
                 res.optimal_maker_moves);
    else
      fmt::print("{} on K_{}: breaker win\n", variant_s, n);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maker-breaker and strong positional game engine"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "run seeded games in batch");
  simulate->add_option("--variant", sim.variant, "game variant");
  simulate->add_option("--n", sim.n, "board vertices");
  simulate->add_option("--k", sim.k, "connectivity target");
  simulate->add_option("--m", sim.m, "game graph density parameter");
  simulate->add_option("--adversary", sim.adversary, "opponent kind");
  simulate->add_option("--seed", sim.seed, "first seed");
  simulate->add_option("--reps", sim.reps, "repetitions (consecutive seeds)");
  simulate->add_option("--profile", sim.profile, "constants profile");
  simulate->add_option("--out", sim.out_dir, "transcript output directory");
  simulate->add_option("--jobs", sim.jobs, "worker threads (0 = auto)");
  simulate->add_flag("--strict", sim.strict, "nonzero exit on any forfeit");

  std::string gk_path, gk_partition = "blocks";
  int gk_k = 3;
  auto* verify = app.add_subcommand("verify-gk", "check family membership");
  verify->add_option("file", gk_path, "edge-list file")->required();
  verify->add_option("--k", gk_k, "connectivity target");
  verify->add_option("--partition", gk_partition, "blocks or round-robin");

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "interactive session");
  play_cmd->add_option("--variant", play.variant, "game variant");
  play_cmd->add_option("--n", play.n, "board vertices");
  play_cmd->add_option("--k", play.k, "connectivity target");
  play_cmd->add_option("--m", play.m, "game graph density parameter");
  play_cmd->add_option("--seed", play.seed, "game graph seed");
  play_cmd->add_option("--profile", play.profile, "constants profile");
  play_cmd->add_option("--out", play.out, "transcript file");

  std::string solve_variant = "weak-conn1";
  int solve_n = 4;
  auto* solve = app.add_subcommand("solve", "exhaustive tiny-board solve");
  solve->add_option("--variant", solve_variant, "game variant");
  solve->add_option("--n", solve_n, "board vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim);
    if (verify->parsed()) return cmd_verify_gk(gk_path, gk_k, gk_partition);
    if (play_cmd->parsed()) return cmd_play(play);
    if (solve->parsed()) return cmd_solve(solve_variant, solve_n);
  } catch (const GameError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  return 2;
}
