#include <gtest/gtest.h>

#include <random>

#include "nimgraph/generate.hpp"
#include "nimgraph/graph.hpp"

using namespace nimgraph;

TEST(GameGraph, RejectsLoops) {
  EXPECT_THROW(GameGraph(2, {{0, 0, 1}}, 0), graph_error);
}

TEST(GameGraph, RejectsDuplicatePairsInEitherOrientation) {
  EXPECT_THROW(GameGraph(2, {{0, 1, 1}, {1, 0, 2}}, 0), graph_error);
}

TEST(GameGraph, RejectsZeroWeightAndOutOfRange) {
  EXPECT_THROW(GameGraph(2, {{0, 1, 0}}, 0), graph_error);
  EXPECT_THROW(GameGraph(2, {{0, 2, 1}}, 0), graph_error);
  EXPECT_THROW(GameGraph(2, {{0, 1, 1}}, 2), graph_error);
  EXPECT_THROW(GameGraph(0, {}, 0), graph_error);
}

TEST(GameGraph, FindEdgeIsSymmetric) {
  const GameGraph g(3, {{0, 1, 2}, {1, 2, 3}}, 0);
  EXPECT_EQ(g.find_edge(0, 1), 0u);
  EXPECT_EQ(g.find_edge(1, 0), 0u);
  EXPECT_EQ(g.find_edge(2, 1), 1u);
  EXPECT_EQ(g.find_edge(0, 2), GameGraph::npos);
}

TEST(LegalMoves, CountIsSumOfIncidentWeights) {
  // token between the weight-3 and weight-4 edges
  const GameGraph g = golden::c4_mover_wins();
  EXPECT_EQ(legal_moves(g, fresh_state(g)).size(), 7u);
}

TEST(LegalMoves, SingleUnitEdge) {
  const GameGraph g = path(1);
  const auto moves = legal_moves(g, fresh_state(g));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0], (Move{1, 0}));
}

TEST(LegalMoves, OrderedByTargetThenWeight) {
  const GameGraph g(3, {{0, 2, 2}, {0, 1, 2}}, 0);
  const std::vector<Move> expected{{1, 0}, {1, 1}, {2, 0}, {2, 1}};
  EXPECT_EQ(legal_moves(g, fresh_state(g)), expected);
}

TEST(LegalMoves, EmptyWhenIncidentEdgesAreGone) {
  const GameGraph g = path(2);
  GameState s = fresh_state(g, 1);
  s.weights = {0, 0};
  EXPECT_TRUE(legal_moves(g, s).empty());
  EXPECT_TRUE(is_terminal(g, s));
}

TEST(IsTerminal, IsolatedTokenAndFreshGraph) {
  const GameGraph isolated(2, {}, 0);
  EXPECT_TRUE(is_terminal(isolated, fresh_state(isolated)));
  const GameGraph g = cycle(5);
  EXPECT_FALSE(is_terminal(g, fresh_state(g)));
}

TEST(ApplyMove, UnitPath) {
  const GameGraph g = path(2);
  const GameState s = apply_move(g, fresh_state(g), {1, 0});
  EXPECT_EQ(s.token, 1u);
  EXPECT_EQ(s.weights, (std::vector<Weight>{0, 1}));
}

TEST(ApplyMove, ReducesTraversedEdgeToChosenWeight) {
  const GameGraph g = golden::c6_reduced_odd_path();
  const GameState s = apply_move(g, fresh_state(g), {1, 2});
  EXPECT_EQ(s.token, 1u);
  EXPECT_EQ(s.weights, (std::vector<Weight>{2, 5, 6, 2, 4, 5}));
}

TEST(ApplyMove, RejectsIllegalMoves) {
  const GameGraph g = path(2, UniformWeights{2});
  const GameState s = fresh_state(g);
  EXPECT_THROW(apply_move(g, s, {1, 2}), illegal_move);  // not a decrease
  EXPECT_THROW(apply_move(g, s, {1, 5}), illegal_move);
  EXPECT_THROW(apply_move(g, s, {2, 0}), illegal_move);  // no edge
  EXPECT_THROW(apply_move(g, s, {0, 0}), illegal_move);  // self
  const GameState t = apply_move(g, s, {1, 0});
  EXPECT_THROW(apply_move(g, t, {0, 0}), illegal_move);  // weight-0 edge
  EXPECT_FALSE(is_legal(g, t, {0, 0}));
}

TEST(ApplyMove, ReturnsFreshStateLeavingInputUntouched) {
  const GameGraph g = path(1, UniformWeights{3});
  const GameState s = fresh_state(g);
  (void)apply_move(g, s, {1, 0});
  EXPECT_EQ(s.weights[0], 3u);
  EXPECT_EQ(s.token, 0u);
}

TEST(Labels, OneBasedRendering) {
  EXPECT_EQ(vertex_label(0), "v1");
  EXPECT_EQ(to_string(Move{1, 2}), "v2 w=2");
}

// Random playouts: every move lowers the total weight by exactly the amount
// removed, terminal iff no moves, and games end within the initial total.
TEST(Properties, RandomPlayoutsTerminate) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 3 + round % 5;
    const GameGraph g = complete(n, RandomWeights{4, static_cast<std::uint64_t>(round)},
                                 static_cast<Vertex>(round % n));
    GameState s = fresh_state(g);
    const auto initial = total_weight(s);
    std::size_t plies = 0;
    while (!is_terminal(g, s)) {
      const auto moves = legal_moves(g, s);
      ASSERT_FALSE(moves.empty());
      EXPECT_EQ(moves.size(), move_count(g, s));
      const Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      const Weight old = s.weights[g.find_edge(s.token, m.to)];
      const auto before = total_weight(s);
      s = apply_move(g, s, m);
      EXPECT_EQ(total_weight(s), before - (old - m.new_weight));
      ++plies;
    }
    EXPECT_TRUE(legal_moves(g, s).empty());
    EXPECT_LE(plies, initial);
  }
}
