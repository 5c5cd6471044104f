#pragma once

// Closed-form predictors and move choosers. Each strategy answers for the
// player to move ("P1") in the given position; none of them consults the
// solver.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nimgraph/error.hpp"
#include "nimgraph/graph.hpp"
#include "nimgraph/structures.hpp"

namespace nimgraph {

// P1 is the player to move, P2 the opponent.
enum class Prediction { P1Wins, P2Wins, NoClaim };

inline std::string_view to_string(Prediction p) {
  switch (p) {
    case Prediction::P1Wins: return "P1Wins";
    case Prediction::P2Wins: return "P2Wins";
    case Prediction::NoClaim: return "NoClaim";
  }
  return "?";
}

struct StrategyResult {
  std::string_view strategy = "none";
  Prediction prediction = Prediction::NoClaim;
  std::optional<Move> move;  // set iff prediction == P1Wins
};

// The two hubs of a K_{2,j}/SSB structure; `a` is where the token started.
struct Hubs {
  Vertex a = 0;
  Vertex b = 0;
};

// Edge weights after subtracting the minimum positive weight m of the
// token's component. Edges outside the component reduce to 0.
struct ReducedGraph {
  Weight m = 0;
  std::vector<Weight> reduced_weights;
};

inline ReducedGraph reduce(const GameGraph& g, const GameState& s) {
  const PositiveView view(g, s);
  ReducedGraph r{view.min_weight(), std::vector<Weight>(g.edge_count(), 0)};
  for (std::size_t e : view.edges()) r.reduced_weights[e] = s.weights[e] - r.m;
  return r;
}

inline StrategyResult path_strategy(const GameGraph& g, const GameState& s) {
  const PositiveView view(g, s);
  if (!view.is_spider()) throw strategy_error("path strategy: token's component is not a path");
  for (Vertex n : view.neighbors(s.token)) {
    if (view.walk_length(n, [](Weight w) { return w > 0; }) % 2 == 1) {
      return {"path", Prediction::P1Wins, Move{n, 0}};
    }
  }
  return {"path", Prediction::P2Wins, std::nullopt};
}

inline StrategyResult odd_cycle_strategy(const GameGraph& g, const GameState& s) {
  const PositiveView view(g, s);
  if (!view.is_cycle() || view.vertices().size() % 2 == 0) {
    throw strategy_error("odd cycle strategy: token's component is not an odd cycle");
  }
  return {"odd_cycle", Prediction::P1Wins, Move{view.neighbors(s.token).front(), 0}};
}

// Subtract the minimum weight m and look at the options from the token in
// what is left: an odd path option wins by reducing its first edge to m.
// A cycle that has been broken mid-game is handed to the path strategy.
inline StrategyResult even_cycle_strategy(const GameGraph& g, const GameState& s) {
  const PositiveView view(g, s);
  if (view.is_spider()) return path_strategy(g, s);
  if (!view.is_cycle() || view.vertices().size() % 2 == 1) {
    throw strategy_error("even cycle strategy: token's component is not an even cycle");
  }
  const Weight m = view.min_weight();
  for (Vertex n : view.neighbors(s.token)) {
    const auto len = view.walk_length(n, [m](Weight w) { return w > m; });
    if (len % 2 == 1) return {"even_cycle", Prediction::P1Wins, Move{n, m}};
  }
  return {"even_cycle", Prediction::P2Wins, std::nullopt};
}

// Moves the reduced-graph analysis prescribes as winning: one per odd path
// option. Empty when the mover is on a 0-position. Even cycles only.
inline std::vector<Move> even_cycle_prescribed_moves(const GameGraph& g, const GameState& s) {
  const PositiveView view(g, s);
  if (!view.is_cycle() || view.vertices().size() % 2 == 1) {
    throw strategy_error("even cycle strategy: token's component is not an even cycle");
  }
  const Weight m = view.min_weight();
  std::vector<Move> out;
  for (Vertex n : view.neighbors(s.token))
    if (view.walk_length(n, [m](Weight w) { return w > m; }) % 2 == 1) out.push_back({n, m});
  return out;
}

// From a non-hub vertex, return to hub a if its edge is still there,
// otherwise to hub b.
inline std::optional<Move> hub_return_move(const GameGraph& g, const GameState& s, Hubs hubs) {
  if (s.token == hubs.a || s.token == hubs.b) return std::nullopt;
  for (Vertex h : {hubs.a, hubs.b}) {
    const auto e = g.find_edge(s.token, h);
    if (e != GameGraph::npos && s.weights[e] > 0) return Move{h, 0};
  }
  return std::nullopt;
}

// Unit K_{2,j} with the token on a hub: the player to move loses.
inline StrategyResult k2j_strategy(const GameGraph& g, const GameState& s) {
  const auto tag = find_tag(detect(g, s), StructureKind::K2jHubStart);
  if (!tag) throw strategy_error("k2j strategy: no unit K_{2,j} with the token on a hub");
  return {"k2j", Prediction::P2Wins, std::nullopt};
}

inline Hubs k2j_hubs(const GameGraph& g, const GameState& s) {
  const auto tag = find_tag(detect(g, s), StructureKind::K2jHubStart);
  if (!tag) throw strategy_error("k2j strategy: no unit K_{2,j} with the token on a hub");
  return {tag->a, tag->b};
}

// The defender's reply on K_{2,j}: from a leaf, go to the hub still attached.
inline std::optional<Move> k2j_defender_reply(const GameGraph& g, const GameState& s, Hubs hubs) {
  return hub_return_move(g, s, hubs);
}

// First mutually adjacent pair on the token, when the component is unit-weight.
inline std::optional<StructureTag> unit_mutual_pair(const GameGraph& g, const GameState& s) {
  if (!PositiveView(g, s).unit_weights()) return std::nullopt;
  return find_tag(detect(g, s), StructureKind::MutuallyAdjacentPair);
}

// Entry point on a unit-weight graph with the token on one of two mutually
// adjacent vertices: remove the hub edge first.
inline StrategyResult ssb_strategy(const GameGraph& g, const GameState& s) {
  const auto tag = unit_mutual_pair(g, s);
  if (!tag) throw strategy_error("ssb strategy: token is not on a unit-weight mutually adjacent pair");
  return {"ssb", Prediction::P1Wins, Move{tag->b, 0}};
}

inline Hubs ssb_hubs(const GameGraph& g, const GameState& s) {
  const auto tag = unit_mutual_pair(g, s);
  if (!tag) throw strategy_error("ssb strategy: token is not on a unit-weight mutually adjacent pair");
  return {tag->a, tag->b};
}

// Continuation once the hubs are fixed: cross the hub edge while it exists,
// afterwards always move back to a hub. NoClaim when neither applies.
inline StrategyResult ssb_strategy(const GameGraph& g, const GameState& s, Hubs hubs) {
  if (s.token == hubs.a || s.token == hubs.b) {
    const Vertex other = s.token == hubs.a ? hubs.b : hubs.a;
    const auto e = g.find_edge(hubs.a, hubs.b);
    if (e != GameGraph::npos && s.weights[e] > 0) return {"ssb", Prediction::P1Wins, Move{other, 0}};
    return {"ssb", Prediction::NoClaim, std::nullopt};
  }
  if (auto m = hub_return_move(g, s, hubs)) return {"ssb", Prediction::P1Wins, *m};
  return {"ssb", Prediction::NoClaim, std::nullopt};
}

// Most specific applicable strategy: ssb > k2j > even_cycle > odd_cycle > path.
inline StrategyResult dispatch(const GameGraph& g, const GameState& s) {
  const auto tags = detect(g, s);
  const bool unit = PositiveView(g, s).unit_weights();
  if (unit && find_tag(tags, StructureKind::MutuallyAdjacentPair)) return ssb_strategy(g, s);
  if (find_tag(tags, StructureKind::K2jHubStart)) return k2j_strategy(g, s);
  if (find_tag(tags, StructureKind::EvenCycle)) return even_cycle_strategy(g, s);
  if (find_tag(tags, StructureKind::OddCycle)) return odd_cycle_strategy(g, s);
  if (find_tag(tags, StructureKind::OddPathOption) || find_tag(tags, StructureKind::AllEvenPathOptions)) {
    return path_strategy(g, s);
  }
  return {};
}

}  // namespace nimgraph
