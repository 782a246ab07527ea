#include "posgames/driver.hpp"

#include <fmt/core.h>

#include "json.hpp"
#include "posgames/kconn_strong.hpp"

namespace posgames {

using nlohmann::json;

GameSpec game_spec_for(const RunConfig& cfg) {
  GameSpec spec;
  spec.variant = cfg.variant;
  spec.n = cfg.n;
  spec.m = cfg.m;
  switch (cfg.variant) {
    case Variant::WeakKConn:
    case Variant::StrongKConn:
      spec.k = cfg.k;
      spec.constants = GameConstants::from_profile(cfg.profile, cfg.k, cfg.n);
      break;
    case Variant::WeakConn1:
      spec.k = 1;
      spec.constants = GameConstants::from_profile(cfg.profile, 2, cfg.n);
      break;
    default:
      spec.k = 0;
      spec.constants = GameConstants::from_profile(cfg.profile, 2, cfg.n);
      break;
  }
  return spec;
}

long long variant_move_bound(const GameSpec& spec) {
  switch (spec.variant) {
    case Variant::WeakKConn:
    case Variant::StrongKConn:
      return (static_cast<long long>(spec.k) * spec.n) / 2 + 1;
    case Variant::WeakMinDeg:
    case Variant::StrongMinDeg:
      return spec.n / 2 + 1;
    case Variant::WeakConn1:
      return spec.n - 1;
    default:
      return 0;
  }
}

namespace {

/// Exhaustive-play protagonist for tiny boards (the spanning
/// connectivity game of the acceptance oracle).
class SolverStrategy : public EdgeStrategy {
 public:
  SolverStrategy(int n, WinPredicate target)
      : solver_(n, std::move(target), Player::One) {}
  StrategyOutcome next_move(const Board& board, std::optional<Edge>) override {
    auto e = solver_.best_edge(board, Player::One);
    if (!e) return StrategyOutcome::pass();
    return StrategyOutcome::claim(*e);
  }
  std::string name() const override { return "solver"; }

 private:
  WeakSolver solver_;
};

std::vector<int> full_scope(int n) {
  std::vector<int> s(n);
  for (int v = 0; v < n; ++v) s[v] = v;
  return s;
}

json certificate_json(const GkCertificate& cert) {
  json props = json::array();
  static const char* names[6] = {"part sizes",      "minimum degree",
                                 "hamilton cycles", "cross matchings",
                                 "foreign parts",   "lonely spacing"};
  for (int i = 0; i < 6; ++i)
    props.push_back(json{{"name", names[i]},
                         {"pass", cert.properties[i].pass},
                         {"witness", cert.properties[i].witness}});
  std::vector<int> sizes;
  for (const auto& part : cert.partition.parts)
    sizes.push_back(static_cast<int>(part.size()));
  return json{{"all_pass", cert.all_pass()},
              {"part_sizes", sizes},
              {"properties", std::move(props)}};
}

}  // namespace

std::shared_ptr<EdgeStrategy> make_protagonist(const RunConfig& cfg) {
  GameSpec spec = game_spec_for(cfg);
  switch (cfg.variant) {
    case Variant::WeakKConn:
      return std::make_shared<KConnWeakStrategy>(cfg.n, cfg.k, spec.constants,
                                                 Player::One);
    case Variant::StrongKConn:
      return std::make_shared<KConnStrongStrategy>(cfg.n, cfg.k, spec.constants,
                                                   Player::One);
    case Variant::WeakMinDeg:
      return std::make_shared<WeakMinDegStrategy>(
          dense_game_graph(cfg.n, cfg.m, cfg.seed), full_scope(cfg.n),
          Player::One);
    case Variant::StrongMinDeg:
      return std::make_shared<StrongMinDegStrategy>(
          dense_game_graph(cfg.n, cfg.m, cfg.seed), full_scope(cfg.n),
          Player::One);
    case Variant::WeakConn1:
      return std::make_shared<SolverStrategy>(cfg.n, kconn_predicate(1));
    default:
      throw GameError("variant " + variant_name(cfg.variant) +
                      " is driven through the library API, not run_single");
  }
}

RunResult run_single(const RunConfig& cfg, const MoveObserver* observer) {
  GameSpec spec = game_spec_for(cfg);
  RunResult result;
  result.protagonist = make_protagonist(cfg);

  bool strong = cfg.variant == Variant::StrongKConn ||
                cfg.variant == Variant::StrongMinDeg;
  AdversaryContext ctx;
  ctx.n = cfg.n;
  ctx.k = spec.k;
  ctx.m = 1;
  ctx.strong = strong;
  ctx.own_target = win_predicate_for(spec);
  if (auto* w = dynamic_cast<KConnWeakStrategy*>(result.protagonist.get()))
    ctx.partition = w->partition();
  else if (auto* s =
               dynamic_cast<KConnStrongStrategy*>(result.protagonist.get()))
    ctx.partition = s->weak().partition();
  AdversarySettings settings = cfg.adversary;
  settings.seed = cfg.seed;
  auto opponent = make_adversary(settings, ctx, Player::Two);

  TranscriptHeader header;
  header.variant = variant_name(cfg.variant);
  header.n = cfg.n;
  header.k = spec.k;
  header.m = cfg.m;
  header.profile = cfg.profile;
  header.seed = cfg.seed;
  if (strong || spec.maker_first)
    header.strategies = {result.protagonist->name(), opponent->name()};
  else
    header.strategies = {opponent->name(), result.protagonist->name()};

  Transcript t =
      strong ? run_strong_game(spec, *result.protagonist, *opponent,
                               std::move(header), nullptr, observer)
             : run_weak_game(spec, *result.protagonist, *opponent,
                             std::move(header), nullptr, observer);

  json certs = json::object();
  if (cfg.variant == Variant::WeakKConn || cfg.variant == Variant::StrongKConn ||
      cfg.variant == Variant::WeakConn1) {
    Board final_board = replay(t);
    SimpleGraph mine = SimpleGraph::of_player(final_board, Player::One);
    certs["connectivity"] = vertex_connectivity(mine).connectivity;
    const KConnWeakStrategy* weak = nullptr;
    if (auto* w = dynamic_cast<KConnWeakStrategy*>(result.protagonist.get()))
      weak = w;
    else if (auto* s =
                 dynamic_cast<KConnStrongStrategy*>(result.protagonist.get()))
      weak = &s->weak();
    if (weak) certs["gk"] = certificate_json(weak->build_certificate(final_board));
  }
  t.certificates_json = certs.dump();

  result.bound = variant_move_bound(spec);
  const std::string& w = t.result.winner;
  result.within_bound = (w == "maker" || w == "red") &&
                        t.result.mover_moves <= result.bound;
  result.transcript = std::move(t);
  return result;
}

}  // namespace posgames
