#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nimgraph/error.hpp"

namespace nimgraph {

using Vertex = std::uint32_t;
using Weight = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;  // initial weight, always >= 1

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// One entry of a vertex's incidence list.
struct Incidence {
  Vertex to = 0;
  std::size_t edge = 0;
};

struct Move {
  Vertex to = 0;
  Weight new_weight = 0;
  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// Immutable simple undirected graph with positive initial weights and a start
// vertex. Incidence lists are sorted by neighbour id, which fixes the move
// enumeration order used everywhere else.
class GameGraph {
 public:
  GameGraph() = default;

  GameGraph(std::size_t vertex_count, std::vector<Edge> edges, Vertex start)
      : vertex_count_(vertex_count), edges_(std::move(edges)), start_(start) {
    if (vertex_count_ == 0) throw graph_error("graph must have at least one vertex");
    if (start_ >= vertex_count_) {
      throw graph_error("start vertex " + std::to_string(start_) + " out of range");
    }
    incidence_.resize(vertex_count_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u >= vertex_count_ || e.v >= vertex_count_) {
        throw graph_error("edge " + std::to_string(i) + " has an endpoint out of range");
      }
      if (e.u == e.v) throw graph_error("edge " + std::to_string(i) + " is a loop");
      if (e.weight == 0) throw graph_error("edge " + std::to_string(i) + " has zero weight");
      incidence_[e.u].push_back({e.v, i});
      incidence_[e.v].push_back({e.u, i});
    }
    for (auto& list : incidence_) {
      std::sort(list.begin(), list.end(),
                [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
      for (std::size_t k = 1; k < list.size(); ++k) {
        if (list[k].to == list[k - 1].to) {
          throw graph_error("duplicate edge between " + std::to_string(edges_[list[k].edge].u) +
                            " and " + std::to_string(edges_[list[k].edge].v));
        }
      }
    }
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  Vertex start() const { return start_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::span<const Incidence> incident(Vertex v) const { return incidence_[v]; }

  // Index of the edge {a, b}, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find_edge(Vertex a, Vertex b) const {
    if (a >= vertex_count_ || b >= vertex_count_) return npos;
    const auto& list = incidence_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Incidence& inc, Vertex x) { return inc.to < x; });
    return (it != list.end() && it->to == b) ? it->edge : npos;
  }

  GameGraph with_start(Vertex start) const { return GameGraph(vertex_count_, edges_, start); }

  std::vector<Weight> initial_weights() const {
    std::vector<Weight> w(edges_.size());
    std::transform(edges_.begin(), edges_.end(), w.begin(), [](const Edge& e) { return e.weight; });
    return w;
  }

  friend bool operator==(const GameGraph& a, const GameGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.start_ == b.start_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  Vertex start_ = 0;
  std::vector<std::vector<Incidence>> incidence_;
};

// Current edge weights (index-aligned with GameGraph::edges) plus the token.
// Zero-weight edges stay in the vector and are simply unplayable.
struct GameState {
  std::vector<Weight> weights;
  Vertex token = 0;

  friend bool operator==(const GameState&, const GameState&) = default;
};

inline GameState fresh_state(const GameGraph& g) { return {g.initial_weights(), g.start()}; }

inline GameState fresh_state(const GameGraph& g, Vertex token) {
  if (token >= g.vertex_count()) throw graph_error("token vertex out of range");
  return {g.initial_weights(), token};
}

inline std::uint64_t total_weight(const GameState& s) {
  return std::accumulate(s.weights.begin(), s.weights.end(), std::uint64_t{0});
}

inline void check_state(const GameGraph& g, const GameState& s) {
  if (s.weights.size() != g.edge_count()) throw graph_error("state weight vector has wrong length");
  if (s.token >= g.vertex_count()) throw graph_error("state token out of range");
  for (std::size_t i = 0; i < s.weights.size(); ++i) {
    if (s.weights[i] > g.edge(i).weight) {
      throw graph_error("weight of edge " + std::to_string(i) + " exceeds its initial weight");
    }
  }
}

// Ascending `to`, then ascending new weight.
inline std::vector<Move> legal_moves(const GameGraph& g, const GameState& s) {
  std::vector<Move> moves;
  for (const Incidence& inc : g.incident(s.token)) {
    const Weight w = s.weights[inc.edge];
    for (Weight k = 0; k < w; ++k) moves.push_back({inc.to, k});
  }
  return moves;
}

inline std::size_t move_count(const GameGraph& g, const GameState& s) {
  std::size_t n = 0;
  for (const Incidence& inc : g.incident(s.token)) n += s.weights[inc.edge];
  return n;
}

inline bool is_terminal(const GameGraph& g, const GameState& s) {
  return std::none_of(g.incident(s.token).begin(), g.incident(s.token).end(),
                      [&](const Incidence& inc) { return s.weights[inc.edge] > 0; });
}

inline bool is_legal(const GameGraph& g, const GameState& s, const Move& m) {
  const std::size_t e = g.find_edge(s.token, m.to);
  return e != GameGraph::npos && m.new_weight < s.weights[e];
}

inline GameState apply_move(const GameGraph& g, const GameState& s, const Move& m) {
  const std::size_t e = g.find_edge(s.token, m.to);
  if (e == GameGraph::npos) {
    throw illegal_move("no edge between " + std::to_string(s.token) + " and " + std::to_string(m.to));
  }
  if (s.weights[e] == 0) {
    throw illegal_move("edge " + std::to_string(s.token) + "-" + std::to_string(m.to) + " has weight 0");
  }
  if (m.new_weight >= s.weights[e]) {
    throw illegal_move("new weight " + std::to_string(m.new_weight) + " is not below current weight " +
                       std::to_string(s.weights[e]));
  }
  GameState next = s;
  next.weights[e] = m.new_weight;
  next.token = m.to;
  return next;
}

// Paper-style 1-based label.
inline std::string vertex_label(Vertex v) { return "v" + std::to_string(v + 1); }

inline std::string to_string(const Move& m) {
  return vertex_label(m.to) + " w=" + std::to_string(m.new_weight);
}

}  // namespace nimgraph
