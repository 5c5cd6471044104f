#pragma once

// Structure detection on the positive-weight subgraph around the token.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nimgraph/graph.hpp"

namespace nimgraph {

enum class StructureKind {
  OddPathOption,
  AllEvenPathOptions,
  OddCycle,
  EvenCycle,
  K2jHubStart,
  SSBHubStart,
  Complete,
  MutuallyAdjacentPair,
};

// `size` carries j for K2jHubStart/SSBHubStart, k for MutuallyAdjacentPair,
// the cycle length for cycles, the vertex count for Complete and the shortest
// odd option for OddPathOption. `a`/`b` are the hubs or the mutual pair, with
// `a` the token.
struct StructureTag {
  StructureKind kind;
  std::size_t size = 0;
  Vertex a = 0;
  Vertex b = 0;
  friend bool operator==(const StructureTag&, const StructureTag&) = default;
};

inline std::string to_string(const StructureTag& t) {
  switch (t.kind) {
    case StructureKind::OddPathOption: return "OddPathOption";
    case StructureKind::AllEvenPathOptions: return "AllEvenPathOptions";
    case StructureKind::OddCycle: return "OddCycle(" + std::to_string(t.size) + ")";
    case StructureKind::EvenCycle: return "EvenCycle(" + std::to_string(t.size) + ")";
    case StructureKind::K2jHubStart:
      return "K2jHubStart(" + std::to_string(t.size) + "; " + vertex_label(t.a) + "," + vertex_label(t.b) + ")";
    case StructureKind::SSBHubStart:
      return "SSBHubStart(" + std::to_string(t.size) + "; " + vertex_label(t.a) + "," + vertex_label(t.b) + ")";
    case StructureKind::Complete: return "Complete(" + std::to_string(t.size) + ")";
    case StructureKind::MutuallyAdjacentPair:
      return "MutuallyAdjacentPair(" + vertex_label(t.a) + "," + vertex_label(t.b) + "; k=" + std::to_string(t.size) + ")";
  }
  return "?";
}

// Positive-weight adjacency, restricted to the token's component.
class PositiveView {
 public:
  PositiveView(const GameGraph& g, const GameState& s) : g_(&g), s_(&s), in_component_(g.vertex_count(), false) {
    std::vector<Vertex> stack{s.token};
    in_component_[s.token] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      vertices_.push_back(v);
      for (const Incidence& inc : g.incident(v)) {
        if (s.weights[inc.edge] == 0) continue;
        if (!in_component_[inc.to]) {
          in_component_[inc.to] = true;
          stack.push_back(inc.to);
        }
      }
    }
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (s.weights[e] > 0 && in_component_[g.edge(e).u]) edges_.push_back(e);
  }

  Vertex token() const { return s_->token; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::size_t>& edges() const { return edges_; }
  bool contains(Vertex v) const { return in_component_[v]; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Incidence& inc : g_->incident(v))
      if (s_->weights[inc.edge] > 0) out.push_back(inc.to);
    return out;
  }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (const Incidence& inc : g_->incident(v)) d += s_->weights[inc.edge] > 0;
    return d;
  }

  // 0 when there is no positive edge.
  Weight weight(Vertex a, Vertex b) const {
    const auto e = g_->find_edge(a, b);
    return e == GameGraph::npos ? 0 : s_->weights[e];
  }

  bool unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [&](std::size_t e) { return s_->weights[e] == 1; });
  }

  Weight min_weight() const {
    Weight m = 0;
    for (std::size_t e : edges_) m = (m == 0) ? s_->weights[e] : std::min(m, s_->weights[e]);
    return m;
  }

  // Acyclic, and every vertex other than the token has degree at most two:
  // each option from the token is then a simple path to a degree-1 vertex.
  bool is_spider() const {
    if (edges_.size() + 1 != vertices_.size()) return false;
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [&](Vertex v) { return v == s_->token || degree(v) <= 2; });
  }

  bool is_cycle() const {
    return vertices_.size() >= 3 && edges_.size() == vertices_.size() &&
           std::all_of(vertices_.begin(), vertices_.end(), [&](Vertex v) { return degree(v) == 2; });
  }

  bool is_complete() const {
    const auto n = vertices_.size();
    return n >= 2 && edges_.size() == n * (n - 1) / 2;
  }

  // Edge count of the walk token -> first -> ... while `keep(weight)` holds,
  // following the unique continuation at degree-2 vertices. Used on spiders
  // and cycles only.
  template <class Keep>
  std::size_t walk_length(Vertex first, Keep keep) const {
    Vertex prev = s_->token;
    Vertex cur = first;
    if (!keep(weight(prev, cur))) return 0;
    std::size_t len = 1;
    while (true) {
      std::optional<Vertex> next;
      for (Vertex n : neighbors(cur))
        if (n != prev) next = n;
      if (!next || *next == s_->token || degree(cur) != 2 || !keep(weight(cur, *next))) return len;
      prev = cur;
      cur = *next;
      ++len;
    }
  }

 private:
  const GameGraph* g_;
  const GameState* s_;
  std::vector<bool> in_component_;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> edges_;
};

namespace detail {

inline bool same_set_except(std::vector<Vertex> na, Vertex drop_a, std::vector<Vertex> nb, Vertex drop_b) {
  std::erase(na, drop_a);
  std::erase(nb, drop_b);
  return na == nb;  // neighbour lists come out sorted
}

// Hub partner for K_{2,j} (adjacent = false) or SSB_j (adjacent = true) with
// the token as the first hub, or nullopt.
inline std::optional<std::pair<Vertex, std::size_t>> hub_partner(const PositiveView& view, bool adjacent) {
  const Vertex t = view.token();
  const auto nt = view.neighbors(t);
  std::vector<Vertex> candidates;
  if (adjacent) {
    candidates = nt;
  } else if (!nt.empty()) {
    for (Vertex x : view.neighbors(nt.front()))
      if (x != t) candidates.push_back(x);
  }
  for (Vertex h : candidates) {
    if (h == t) continue;
    if ((view.weight(t, h) > 0) != adjacent) continue;
    auto leaves = nt;
    std::erase(leaves, h);
    if (leaves.empty()) continue;
    if (!same_set_except(nt, h, view.neighbors(h), t)) continue;
    if (view.vertices().size() != leaves.size() + 2) continue;
    const bool leaves_ok = std::all_of(leaves.begin(), leaves.end(), [&](Vertex l) { return view.degree(l) == 2; });
    if (leaves_ok) return std::pair{h, leaves.size()};
  }
  return std::nullopt;
}

}  // namespace detail

inline std::vector<StructureTag> detect(const GameGraph& g, const GameState& s) {
  const PositiveView view(g, s);
  const Vertex t = s.token;
  std::vector<StructureTag> tags;

  if (view.is_spider()) {
    std::optional<std::size_t> shortest_odd;
    for (Vertex n : view.neighbors(t)) {
      const auto len = view.walk_length(n, [](Weight w) { return w > 0; });
      if (len % 2 == 1 && (!shortest_odd || len < *shortest_odd)) shortest_odd = len;
    }
    if (shortest_odd) {
      tags.push_back({StructureKind::OddPathOption, *shortest_odd, t, t});
    } else {
      tags.push_back({StructureKind::AllEvenPathOptions, 0, t, t});
    }
  }
  if (view.is_cycle()) {
    const auto n = view.vertices().size();
    tags.push_back({n % 2 == 1 ? StructureKind::OddCycle : StructureKind::EvenCycle, n, t, t});
  }
  if (view.unit_weights()) {
    if (auto k2j = detail::hub_partner(view, false)) {
      tags.push_back({StructureKind::K2jHubStart, k2j->second, t, k2j->first});
    }
    if (auto sb = detail::hub_partner(view, true)) {
      tags.push_back({StructureKind::SSBHubStart, sb->second, t, sb->first});
    }
  }
  if (view.is_complete()) tags.push_back({StructureKind::Complete, view.vertices().size(), t, t});

  const auto nt = view.neighbors(t);
  for (Vertex b : nt) {
    if (detail::same_set_except(nt, b, view.neighbors(b), t)) {
      tags.push_back({StructureKind::MutuallyAdjacentPair, nt.size() - 1, t, b});
    }
  }
  return tags;
}

inline std::optional<StructureTag> find_tag(const std::vector<StructureTag>& tags, StructureKind kind) {
  for (const auto& t : tags)
    if (t.kind == kind) return t;
  return std::nullopt;
}

// Partition of the token's options by closed-neighbourhood equivalence: two
// options share a class iff there is an isomorphism between the subgraphs
// induced on their closed neighbourhoods that sends one option to the other
// and fixes the token. With `weighted` the isomorphism must also preserve
// weights (identical options); without it the options are merely isomorphic.
inline std::vector<std::vector<Vertex>> option_classes(const GameGraph& g, const GameState& s, bool weighted = true) {
  const PositiveView view(g, s);
  const Vertex t = s.token;
  const auto options = view.neighbors(t);

  auto closed = [&](Vertex v) {
    auto n = view.neighbors(v);
    n.push_back(v);
    std::sort(n.begin(), n.end());
    return n;
  };
  auto label = [&](Vertex x, Vertex y) -> Weight {
    const Weight w = view.weight(x, y);
    return weighted ? w : (w > 0 ? 1 : 0);
  };

  auto equivalent = [&](Vertex j, Vertex k) {
    const auto nj = closed(j);
    const auto nk = closed(k);
    if (nj.size() != nk.size()) return false;
    std::vector<Vertex> from{j, t};
    std::vector<Vertex> to{k, t};
    for (Vertex v : nj)
      if (v != j && v != t) from.push_back(v);
    std::vector<Vertex> pool;
    for (Vertex v : nk)
      if (v != k && v != t) pool.push_back(v);
    if (from.size() != to.size() + pool.size()) return false;
    if (label(j, t) != label(k, t)) return false;

    std::vector<bool> used(pool.size(), false);
    auto consistent = [&](std::size_t i, Vertex image) {
      for (std::size_t p = 0; p < i; ++p)
        if (label(from[i], from[p]) != label(image, to[p])) return false;
      return true;
    };
    auto extend = [&](auto&& self, std::size_t i) -> bool {
      if (i == from.size()) return true;
      for (std::size_t c = 0; c < pool.size(); ++c) {
        if (used[c] || !consistent(i, pool[c])) continue;
        used[c] = true;
        to.push_back(pool[c]);
        if (self(self, i + 1)) return true;
        to.pop_back();
        used[c] = false;
      }
      return false;
    };
    return extend(extend, 2);
  };

  std::vector<std::vector<Vertex>> classes;
  for (Vertex o : options) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return equivalent(c.front(), o); });
    if (it == classes.end()) {
      classes.push_back({o});
    } else {
      it->push_back(o);
    }
  }
  return classes;
}

inline std::vector<std::vector<Vertex>> identical_options(const GameGraph& g, const GameState& s) {
  return option_classes(g, s, true);
}

}  // namespace nimgraph
