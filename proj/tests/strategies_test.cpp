#include <gtest/gtest.h>

#include "nimgraph/generate.hpp"
#include "nimgraph/solver.hpp"
#include "nimgraph/strategies.hpp"

using namespace nimgraph;

TEST(PathStrategy, ParityFromEveryVertex) {
  for (std::size_t len = 1; len <= 9; ++len) {
    const GameGraph g = path(len);
    Solver solver(g);
    for (Vertex v = 0; v <= len; ++v) {
      const auto s = fresh_state(g, v);
      const auto r = path_strategy(g, s);
      const bool odd_option = v % 2 == 1 || (len - v) % 2 == 1;
      EXPECT_EQ(r.prediction, odd_option ? Prediction::P1Wins : Prediction::P2Wins);
      EXPECT_EQ(r.prediction == Prediction::P1Wins, solver.winner(s) == Winner::Mover);
      if (r.move) {
        EXPECT_EQ(r.move->new_weight, 0u);
      }
    }
  }
}

TEST(PathStrategy, WeightedPathsStillFollowParity) {
  const GameGraph g = path(3, ExplicitWeights{{5, 1, 4}});
  const auto r = path_strategy(g, fresh_state(g));
  EXPECT_EQ(r.prediction, Prediction::P1Wins);
  EXPECT_EQ(r.move, (Move{1, 0}));
  EXPECT_EQ(solve(g, fresh_state(g)).winner, Winner::Mover);
}

TEST(PathStrategy, RefusesNonPaths) {
  EXPECT_THROW(path_strategy(cycle(4), fresh_state(cycle(4))), strategy_error);
}

TEST(OddCycleStrategy, ZeroesAnEdge) {
  const GameGraph g = cycle(5, ExplicitWeights{{3, 1, 2, 2, 1}});
  const auto r = odd_cycle_strategy(g, fresh_state(g));
  EXPECT_EQ(r.prediction, Prediction::P1Wins);
  EXPECT_EQ(r.move, (Move{1, 0}));
  EXPECT_THROW(odd_cycle_strategy(cycle(4), fresh_state(cycle(4))), strategy_error);
}

TEST(EvenCycleStrategy, Goldens) {
  const auto wins = even_cycle_strategy(golden::c4_mover_wins(), fresh_state(golden::c4_mover_wins()));
  EXPECT_EQ(wins.prediction, Prediction::P1Wins);
  EXPECT_EQ(wins.move, (Move{1, 2}));
  const auto loses = even_cycle_strategy(golden::c4_mover_loses(), fresh_state(golden::c4_mover_loses()));
  EXPECT_EQ(loses.prediction, Prediction::P2Wins);
  EXPECT_FALSE(loses.move);
}

TEST(EvenCycleStrategy, ReducesFirstEdgeToTheMinimum) {
  const GameGraph g = golden::c6_reduced_odd_path();
  const auto s = fresh_state(g);
  const ReducedGraph r = reduce(g, s);
  EXPECT_EQ(r.m, 2u);
  EXPECT_EQ(r.reduced_weights, (std::vector<Weight>{4, 3, 4, 0, 2, 3}));
  const auto p = even_cycle_strategy(g, s);
  EXPECT_EQ(p.move, (Move{1, 2}));
  EXPECT_EQ(even_cycle_prescribed_moves(g, s), (std::vector<Move>{{1, 2}}));
  EXPECT_EQ(apply_move(g, s, *p.move).weights, (std::vector<Weight>{2, 5, 6, 2, 4, 5}));
}

TEST(EvenCycleStrategy, UniformCycleHasNoWinningMove) {
  const GameGraph g = cycle(6, UniformWeights{2});
  EXPECT_EQ(even_cycle_strategy(g, fresh_state(g)).prediction, Prediction::P2Wins);
  EXPECT_TRUE(even_cycle_prescribed_moves(g, fresh_state(g)).empty());
}

TEST(EvenCycleStrategy, TwoOddOptions) {
  const GameGraph g = cycle(4, ExplicitWeights{{3, 2, 1, 1}}, 1);
  EXPECT_EQ(even_cycle_prescribed_moves(g, fresh_state(g)), (std::vector<Move>{{0, 1}, {2, 1}}));
}

TEST(EvenCycleStrategy, DelegatesOnceTheCycleIsBroken) {
  const GameGraph g = cycle(4, UniformWeights{2});
  const GameState s = apply_move(g, fresh_state(g), {1, 0});
  EXPECT_EQ(even_cycle_strategy(g, s).strategy, "path");
}

TEST(K2jStrategy, HubStartIsAP2Win) {
  const GameGraph g = complete_bipartite_2(4);
  const auto s = fresh_state(g);
  EXPECT_EQ(k2j_strategy(g, s).prediction, Prediction::P2Wins);
  const Hubs h = k2j_hubs(g, s);
  EXPECT_EQ(h.a, 0u);
  EXPECT_EQ(h.b, 1u);
  // P1 goes to a leaf; the defender returns to the other hub
  const GameState leaf = apply_move(g, s, {3, 0});
  EXPECT_EQ(k2j_defender_reply(g, leaf, h), (Move{1, 0}));
  EXPECT_THROW(k2j_strategy(g, leaf), strategy_error);
}

TEST(SsbStrategy, OpensWithTheHubEdge) {
  const GameGraph g = ssb(3);
  const auto s = fresh_state(g);
  const auto r = ssb_strategy(g, s);
  EXPECT_EQ(r.prediction, Prediction::P1Wins);
  EXPECT_EQ(r.move, (Move{1, 0}));
  const GameState after = apply_move(g, s, *r.move);
  // adversary now leaves hub b for a leaf; continuation returns to hub a first
  const GameState leaf = apply_move(g, after, {4, 0});
  EXPECT_EQ(ssb_strategy(g, leaf, {0, 1}).move, (Move{0, 0}));
}

TEST(SsbStrategy, FallsBackToTheOtherHub) {
  const GameGraph g = ssb(2);
  GameState s = fresh_state(g);
  s.weights[g.find_edge(0, 1)] = 0;
  s.weights[g.find_edge(0, 3)] = 0;
  s.token = 3;
  EXPECT_EQ(ssb_strategy(g, s, {0, 1}).move, (Move{1, 0}));
}

TEST(SsbStrategy, RefusesWeightedOrUnpairedStarts) {
  const GameGraph weighted = ssb(3, UniformWeights{2});
  EXPECT_THROW(ssb_strategy(weighted, fresh_state(weighted)), strategy_error);
  EXPECT_THROW(ssb_strategy(cycle(5), fresh_state(cycle(5))), strategy_error);
}

TEST(Dispatch, PicksTheMostSpecificStrategy) {
  EXPECT_EQ(dispatch(complete(4), fresh_state(complete(4))).strategy, "ssb");
  EXPECT_EQ(dispatch(ssb(1), fresh_state(ssb(1))).strategy, "ssb");  // a triangle, but unit-weight pair first
  EXPECT_EQ(dispatch(complete_bipartite_2(3), fresh_state(complete_bipartite_2(3))).strategy, "k2j");
  EXPECT_EQ(dispatch(golden::c4_mover_wins(), fresh_state(golden::c4_mover_wins())).strategy, "even_cycle");
  const GameGraph c5 = cycle(5, UniformWeights{2});
  EXPECT_EQ(dispatch(c5, fresh_state(c5)).strategy, "odd_cycle");
  EXPECT_EQ(dispatch(path(3, UniformWeights{2}), fresh_state(path(3, UniformWeights{2}))).strategy, "path");
  EXPECT_EQ(dispatch(path(1), fresh_state(path(1))).strategy, "ssb");  // single unit edge: a 0-mutual pair
}

TEST(Dispatch, NoClaimOutsideTheKnownFamilies) {
  const GameGraph g = complete(4, UniformWeights{2});
  const auto r = dispatch(g, fresh_state(g));
  EXPECT_EQ(r.prediction, Prediction::NoClaim);
  EXPECT_FALSE(r.move);
}
