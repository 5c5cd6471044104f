#pragma once

#include <charconv>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nimgraph/error.hpp"
#include "nimgraph/graph.hpp"

namespace nimgraph {

enum class Family { Path, Cycle, Complete, CompleteBipartite2, Ssb };

struct UniformWeights {
  Weight value = 1;
};
struct ExplicitWeights {
  std::vector<Weight> values;
};
// Each edge independently uniform in [1, cap].
struct RandomWeights {
  Weight cap = 1;
  std::uint64_t seed = 0;
};
using WeightSpec = std::variant<UniformWeights, ExplicitWeights, RandomWeights>;

// `size` is the edge count for paths, the vertex count for cycles and complete
// graphs, and j for K_{2,j} and SSB_j.
struct FamilySpec {
  Family family = Family::Path;
  std::size_t size = 1;
  WeightSpec weights = UniformWeights{1};
  Vertex start = 0;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite2: return "k2j";
    case Family::Ssb: return "ssb";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "k2j" || name == "complete_bipartite") return Family::CompleteBipartite2;
  if (name == "ssb") return Family::Ssb;
  throw graph_error("unknown family '" + std::string(name) + "'");
}

// "uniform:k", "list:a,b,c" or "random:cap" (seed supplied separately).
inline WeightSpec parse_weight_spec(std::string_view text, std::uint64_t seed = 0) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw graph_error("weight spec needs 'kind:value'");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  auto number = [&](std::string_view tok) {
    Weight v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0) {
      throw graph_error("bad weight '" + std::string(tok) + "' in weight spec");
    }
    return v;
  };
  if (kind == "uniform") return UniformWeights{number(rest)};
  if (kind == "random") return RandomWeights{number(rest), seed};
  if (kind == "list") {
    ExplicitWeights w;
    std::size_t i = 0;
    while (i <= rest.size()) {
      const auto comma = rest.find(',', i);
      const auto tok = rest.substr(i, comma == std::string_view::npos ? std::string_view::npos : comma - i);
      w.values.push_back(number(tok));
      if (comma == std::string_view::npos) break;
      i = comma + 1;
    }
    return w;
  }
  throw graph_error("unknown weight spec kind '" + std::string(kind) + "'");
}

namespace detail {

inline std::vector<Weight> assign_weights(const WeightSpec& spec, std::size_t count) {
  std::vector<Weight> out(count);
  if (const auto* u = std::get_if<UniformWeights>(&spec)) {
    if (u->value == 0) throw graph_error("uniform weight must be positive");
    std::fill(out.begin(), out.end(), u->value);
  } else if (const auto* e = std::get_if<ExplicitWeights>(&spec)) {
    if (e->values.size() != count) {
      throw graph_error("weight list has " + std::to_string(e->values.size()) + " entries, graph has " +
                        std::to_string(count) + " edges");
    }
    out = e->values;
  } else {
    const auto& r = std::get<RandomWeights>(spec);
    if (r.cap == 0) throw graph_error("random weight cap must be positive");
    std::mt19937_64 rng(r.seed);
    std::uniform_int_distribution<Weight> dist(1, r.cap);
    for (auto& w : out) w = dist(rng);
  }
  return out;
}

inline GameGraph build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                       const WeightSpec& spec, Vertex start) {
  const auto weights = assign_weights(spec, pairs.size());
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back({pairs[i].first, pairs[i].second, weights[i]});
  return GameGraph(n, std::move(edges), start);
}

}  // namespace detail

// Hubs of K_{2,j} and SSB_j are vertices 0 and 1; the j leaves follow.
inline GameGraph generate(const FamilySpec& spec) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t n = 0;
  const auto k = spec.size;
  switch (spec.family) {
    case Family::Path:
      if (k < 1) throw graph_error("path needs at least one edge");
      n = k + 1;
      for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      break;
    case Family::Cycle:
      if (k < 3) throw graph_error("cycle needs at least three vertices");
      n = k;
      for (Vertex i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
      break;
    case Family::Complete:
      if (k < 1) throw graph_error("complete graph needs at least one vertex");
      n = k;
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      break;
    case Family::CompleteBipartite2:
    case Family::Ssb:
      if (k < 1) throw graph_error("j must be at least 1");
      n = k + 2;
      if (spec.family == Family::Ssb) pairs.emplace_back(0, 1);
      for (Vertex hub = 0; hub < 2; ++hub)
        for (Vertex leaf = 2; leaf < n; ++leaf) pairs.emplace_back(hub, leaf);
      break;
  }
  if (spec.start >= n) throw graph_error("start vertex out of range for family");
  return detail::build(n, pairs, spec.weights, spec.start);
}

inline GameGraph path(std::size_t edges, WeightSpec w = UniformWeights{1}, Vertex start = 0) {
  return generate({Family::Path, edges, std::move(w), start});
}
inline GameGraph cycle(std::size_t n, WeightSpec w = UniformWeights{1}, Vertex start = 0) {
  return generate({Family::Cycle, n, std::move(w), start});
}
inline GameGraph complete(std::size_t n, WeightSpec w = UniformWeights{1}, Vertex start = 0) {
  return generate({Family::Complete, n, std::move(w), start});
}
inline GameGraph complete_bipartite_2(std::size_t j, WeightSpec w = UniformWeights{1}, Vertex start = 0) {
  return generate({Family::CompleteBipartite2, j, std::move(w), start});
}
inline GameGraph ssb(std::size_t j, WeightSpec w = UniformWeights{1}, Vertex start = 0) {
  return generate({Family::Ssb, j, std::move(w), start});
}

// Unit-weight random graph on n vertices with a planted mutually adjacent pair
// {0, 1}: the two are adjacent and share exactly `common` neighbours, and
// neither has any other neighbour. Remaining pairs are edges with probability
// `density`. Token starts on vertex 0.
inline GameGraph planted_mutual_pair(std::size_t n, std::size_t common, double density, std::uint64_t seed) {
  if (n < 2 || common + 2 > n) throw graph_error("planted pair needs n >= common + 2");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> others;
  for (Vertex v = 2; v < n; ++v) others.push_back(v);
  std::shuffle(others.begin(), others.end(), rng);
  std::vector<bool> in_common(n, false);
  for (std::size_t i = 0; i < common; ++i) in_common[others[i]] = true;

  std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}};
  for (Vertex v = 2; v < n; ++v)
    if (in_common[v]) {
      pairs.emplace_back(0, v);
      pairs.emplace_back(1, v);
    }
  std::bernoulli_distribution coin(density);
  for (Vertex a = 2; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) pairs.emplace_back(a, b);
  return detail::build(n, pairs, UniformWeights{1}, 0);
}

// Reference instances.
namespace golden {

// C_4, token first, weights 3,2,4,4 around the cycle: mover wins.
inline GameGraph c4_mover_wins() { return cycle(4, ExplicitWeights{{3, 2, 4, 4}}); }
// C_4, token first, weights 2,4,3,2 around the cycle: mover loses.
inline GameGraph c4_mover_loses() { return cycle(4, ExplicitWeights{{2, 4, 3, 2}}); }
// C_6 with weights 6,5,6,2,4,5; minimum 2 and an odd path after subtracting it.
inline GameGraph c6_reduced_odd_path() { return cycle(6, ExplicitWeights{{6, 5, 6, 2, 4, 5}}); }

// Five vertices; the token's two options have isomorphic but differently
// weighted closed neighbourhoods. Vertex 0 is the token, 1..4 correspond to
// the drawing's b, c, d, e.
inline GameGraph isomorphic_not_identical() {
  return GameGraph(5,
                   {{0, 4, 2}, {0, 3, 5}, {1, 2, 3}, {1, 3, 2}, {1, 4, 3}, {2, 3, 4}, {2, 4, 3}},
                   0);
}

}  // namespace golden

}  // namespace nimgraph
