#include <gtest/gtest.h>

#include "nimgraph/generate.hpp"
#include "nimgraph/verify.hpp"

using namespace nimgraph;
using namespace nimgraph::verify;

TEST(Exhaustive, SsbThreePasses) {
  const GameGraph g = ssb(3);
  const auto s = fresh_state(g);
  ASSERT_EQ(ssb_strategy(g, s).prediction, Prediction::P1Wins);
  ExhaustiveOptions eo;
  eo.move_check = ssb_confinement(ssb_hubs(g, s));
  const auto r = verify_strategy_exhaustive(g, s, Claimer::Mover, ssb_player(g, ssb_hubs(g, s)), eo);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.states_explored, 1u);
}

TEST(Exhaustive, CompleteSixLeavesTheAdversaryOnHubB) {
  const GameGraph g = complete(6);
  const auto s = fresh_state(g);
  const Hubs hubs = ssb_hubs(g, s);
  ExhaustiveOptions eo;
  eo.move_check = ssb_confinement(hubs);
  const auto r = verify_strategy_exhaustive(g, s, Claimer::Mover, ssb_player(g, hubs), eo);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.adversary_stuck_on, std::set<Vertex>{hubs.b});
}

TEST(Exhaustive, CompleteFiveLeavesTheAdversaryOnHubA) {
  const GameGraph g = complete(5);
  const auto s = fresh_state(g);
  const Hubs hubs = ssb_hubs(g, s);
  const auto r = verify_strategy_exhaustive(g, s, Claimer::Mover, ssb_player(g, hubs));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.adversary_stuck_on, std::set<Vertex>{hubs.a});
}

TEST(Exhaustive, EvenCycleDefenderMirrors) {
  const GameGraph g = golden::c4_mover_loses();
  const auto r = verify_strategy_exhaustive(g, fresh_state(g), Claimer::Defender, cycle_path_player(g));
  EXPECT_TRUE(r.pass());
}

TEST(Exhaustive, K2jDefender) {
  const GameGraph g = complete_bipartite_2(5);
  const auto s = fresh_state(g);
  EXPECT_TRUE(verify_strategy_exhaustive(g, s, Claimer::Defender, k2j_defender(g, k2j_hubs(g, s))).pass());
}

TEST(Exhaustive, BadStrategyIsCaught) {
  // always take the first legal move: loses the mover-winning C_4 somewhere
  const GameGraph g = golden::c4_mover_wins();
  const Player naive = [&g](const GameState& s) -> std::optional<Move> { return legal_moves(g, s).front(); };
  const auto r = verify_strategy_exhaustive(g, fresh_state(g), Claimer::Mover, naive, {}, "first-move");
  EXPECT_FALSE(r.pass());
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front().instance, "first-move");
}

TEST(Exhaustive, NoClaimMidLineIsAFailure) {
  const GameGraph g = path(3);
  int calls = 0;
  const Player once = [&](const GameState&) -> std::optional<Move> {
    if (calls++ == 0) return Move{1, 0};
    return std::nullopt;
  };
  const auto r = verify_strategy_exhaustive(g, fresh_state(g), Claimer::Mover, once);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures.front().observed, "NoClaim");
  EXPECT_EQ(r.failures.front().state, "token=v3 w=0.0.1");
}

TEST(Exhaustive, ConfinementViolationIsReported) {
  const GameGraph g = complete(4);
  const auto s = fresh_state(g);
  // plays a leaf-leaf edge whenever one is available
  const Player stray = [&g](const GameState& st) -> std::optional<Move> {
    for (const Move& m : legal_moves(g, st))
      if (st.token > 1 && m.to > 1) return m;
    return ssb_strategy(g, st, {0, 1}).move;
  };
  ExhaustiveOptions eo;
  eo.move_check = ssb_confinement({0, 1});
  const auto r = verify_strategy_exhaustive(g, s, Claimer::Mover, stray, eo);
  EXPECT_FALSE(r.pass());
  EXPECT_NE(r.failures.front().observed.find("leaves the SSB subgraph"), std::string::npos);
}

TEST(Exhaustive, BudgetIsEnforced) {
  const GameGraph g = complete(6);
  ExhaustiveOptions eo;
  eo.max_states = 10;
  EXPECT_THROW(verify_strategy_exhaustive(g, fresh_state(g), Claimer::Mover, ssb_player(g, {0, 1}), eo),
               budget_exceeded);
}

TEST(Exhaustive, DedupAgreesWithFullBranching) {
  const GameGraph g = complete(6);
  const Hubs hubs{0, 1};
  ExhaustiveOptions eo;
  eo.dedup_identical_options = true;
  const auto fast = verify_strategy_exhaustive(g, fresh_state(g), Claimer::Mover, ssb_player(g, hubs), eo);
  const auto full = verify_strategy_exhaustive(g, fresh_state(g), Claimer::Mover, ssb_player(g, hubs));
  EXPECT_TRUE(fast.pass());
  EXPECT_TRUE(full.pass());
  EXPECT_LT(fast.states_explored, full.states_explored);
  EXPECT_FALSE(fast.notes.empty());
}

TEST(Sweep, AllFourCyclesUpToWeightFour) {
  std::vector<GameGraph> graphs;
  for (const auto& w : all_weightings(4, 4)) graphs.push_back(cycle(4, ExplicitWeights{w}));
  ASSERT_EQ(graphs.size(), 256u);
  const auto r = sweep_predictor_vs_oracle(graphs, "cycle(4)");
  EXPECT_EQ(r.instances_checked, 1024u);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_TRUE(r.audit.ok());
}

TEST(Sweep, UnitCompleteAndK2j) {
  std::vector<GameGraph> complete_graphs, k2j;
  for (std::size_t n = 2; n <= 7; ++n) complete_graphs.push_back(complete(n));
  for (std::size_t j = 1; j <= 6; ++j) k2j.push_back(complete_bipartite_2(j));
  EXPECT_TRUE(sweep_predictor_vs_oracle(complete_graphs, "complete").pass());
  const auto r = sweep_predictor_vs_oracle(k2j, "k2j");
  EXPECT_TRUE(r.pass());
  for (const auto& row : r.rows)
    if (row.start < 2) {
      EXPECT_EQ(row.prediction, "P2Wins");
      EXPECT_EQ(row.oracle, "OpponentWins");
    }
}

TEST(Uniqueness, SingleOptionInstancesAreUnique) {
  // the worked C_4 and a uniform C_6
  const auto r = audit_even_cycle_uniqueness({golden::c4_mover_wins(), cycle(6, UniformWeights{2})}, "goldens");
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances_checked, 10u);
}

TEST(Uniqueness, TwoOddOptionsCanHaveExtraWinningMoves) {
  // both directions from v2 are odd after subtracting m = 1, but reducing the
  // weight-3 edge to 2 also wins
  const GameGraph g = cycle(4, ExplicitWeights{{3, 2, 1, 1}});
  const auto s = fresh_state(g, 1);
  EXPECT_EQ(even_cycle_prescribed_moves(g, s), (std::vector<Move>{{0, 1}, {2, 1}}));
  EXPECT_EQ(solve(g, s).optimal_moves, (std::vector<Move>{{0, 1}, {0, 2}, {2, 1}}));
  const auto r = audit_even_cycle_uniqueness({g}, "counterexample");
  EXPECT_FALSE(r.pass());
}

TEST(CompleteWeighted, SmallCapsAllMoverWins) {
  const auto r = check_complete_arbitrary_weights(4, 2, 0, 1);
  EXPECT_EQ(r.instances_checked, 2u * 2u * 2u * 3u + 64u * 4u);
  EXPECT_TRUE(r.pass());
}

TEST(Reports, CsvIsDeterministicAcrossThreadCounts) {
  SuiteOptions one;
  one.threads = 1;
  SuiteOptions many;
  many.threads = 4;
  for (const char* suite : {"paths", "k2j", "goldens"}) {
    EXPECT_EQ(to_csv(run_suite(suite, one)), to_csv(run_suite(suite, many))) << suite;
  }
}

TEST(Reports, CsvAndTableShapes) {
  SuiteOptions opt;
  opt.max_j = 2;
  const auto r = k2j_suite(opt);
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "family,params,start,prediction,oracle,verdict,states_visited");
  EXPECT_NE(csv.find("k2j,j=1,0,P2Wins,OpponentWins,ok,"), std::string::npos);
  const std::string table = to_table(r);
  EXPECT_NE(table.find("verdict:     PASS"), std::string::npos);
  EXPECT_EQ(table.find("elapsed"), std::string::npos);
  EXPECT_NE(to_table(r, true).find("elapsed"), std::string::npos);
}

TEST(Reports, FailuresMeanFail) {
  VerificationReport r;
  EXPECT_TRUE(r.pass());
  r.failures.push_back({"x", "y", "a", "b"});
  EXPECT_FALSE(r.pass());
}

TEST(Suites, UnknownNameThrows) { EXPECT_THROW(run_suite("nope"), std::invalid_argument); }

TEST(Suites, SmallConfigurationsPass) {
  SuiteOptions opt;
  opt.max_n = 5;
  EXPECT_TRUE(run_suite("paths", opt).pass());
  EXPECT_TRUE(run_suite("odd-cycles", opt).pass());
  EXPECT_TRUE(run_suite("complete", opt).pass());
  SuiteOptions mutual;
  mutual.samples = 10;
  mutual.max_n = 6;
  const auto r = run_suite("mutual", mutual);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances_checked, 10u);
}
