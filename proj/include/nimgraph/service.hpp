#pragma once

// In-memory game sessions behind a small JSON-over-HTTP API.
//
//   POST /api/games                    create (instance text or family spec)
//   GET  /api/games/{id}               current state
//   POST /api/games/{id}/moves         submit {"to", "new_weight"}
//   POST /api/games/{id}/engine-move   let the engine play
//   GET  /api/games/{id}/analysis      oracle verdict, tags, prediction
//
// GameService is transport-free; mount() wires it into a cpp-httplib server.

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "nimgraph/engine.hpp"
#include "nimgraph/error.hpp"
#include "nimgraph/generate.hpp"
#include "nimgraph/graph.hpp"
#include "nimgraph/instance_io.hpp"
#include "nimgraph/solver.hpp"
#include "nimgraph/strategies.hpp"
#include "nimgraph/structures.hpp"

namespace nimgraph::service {

using json = nlohmann::json;

struct Response {
  int status = 200;
  json body;
};

struct ServiceConfig {
  std::size_t capacity = 256;  // live sessions; least recently used is evicted
  SolveBudget budget{};
};

struct GameSession {
  std::string id;
  GameGraph graph;
  GameState state;
  std::vector<Move> history;
  std::unique_ptr<Engine> engine;
  std::mutex mutex;
};

namespace detail {

inline Response error(int status, std::string message) { return {status, json{{"error", std::move(message)}}}; }

inline json move_json(const Move& m) { return json{{"to", m.to}, {"new_weight", m.new_weight}}; }

inline json moves_json(const std::vector<Move>& ms) {
  json out = json::array();
  for (const Move& m : ms) out.push_back(move_json(m));
  return out;
}

// Players alternate from the fresh position: P1 moves on even plies.
inline std::string_view player_to_move(std::size_t plies) { return plies % 2 == 0 ? "P1" : "P2"; }

inline std::string winner_label(Winner w) { return w == Winner::Mover ? "MoverWins" : "OpponentWins"; }

inline std::string make_id(std::uint64_t n) {
  // splitmix64 of a counter: unique, opaque, reproducible
  std::uint64_t z = n + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  static constexpr char hex[] = "0123456789abcdef";
  std::string id(16, '0');
  for (int i = 15; i >= 0; --i, z >>= 4) id[i] = hex[z & 15];
  return id;
}

inline GameGraph graph_from_request(const json& req) {
  if (req.contains("instance")) return parse_instance(req.at("instance").get<std::string>());
  if (!req.contains("family")) throw graph_error("request needs \"instance\" or \"family\"");
  const auto seed = req.value("seed", std::uint64_t{0});
  FamilySpec spec{parse_family(req.at("family").get<std::string>()), req.at("size").get<std::size_t>(),
                  parse_weight_spec(req.value("weights", std::string("uniform:1")), seed),
                  req.value("start", Vertex{0})};
  return generate(spec);
}

}  // namespace detail

class GameService {
 public:
  explicit GameService(ServiceConfig config = {}) : config_(config) {}

  Response create_game(const std::string& body) {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::exception& e) {
      return detail::error(400, std::string("malformed JSON: ") + e.what());
    }
    auto session = std::make_shared<GameSession>();
    EngineMode mode{};
    try {
      mode = parse_engine_mode(req.value("engine", std::string("strategy")));
      session->graph = detail::graph_from_request(req);
    } catch (const std::invalid_argument& e) {
      return detail::error(400, e.what());
    } catch (const json::exception& e) {
      return detail::error(400, e.what());
    }
    session->state = fresh_state(session->graph);
    session->engine = std::make_unique<Engine>(session->graph, mode, config_.budget);

    std::lock_guard lock(registry_mutex_);
    session->id = detail::make_id(next_id_++);
    lru_.push_front(session->id);
    sessions_[session->id] = {session, lru_.begin()};
    while (sessions_.size() > config_.capacity) {
      sessions_.erase(lru_.back());
      lru_.pop_back();
    }
    return {201, summary(*session)};
  }

  Response get_game(const std::string& id) {
    auto s = find(id);
    if (!s) return detail::error(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    if (auto bad = check_history(*s)) return *bad;
    return {200, summary(*s)};
  }

  Response submit_move(const std::string& id, const std::string& body) {
    auto s = find(id);
    if (!s) return detail::error(404, "unknown game " + id);
    Move m;
    try {
      const json req = json::parse(body);
      m = {req.at("to").get<Vertex>(), req.at("new_weight").get<Weight>()};
    } catch (const json::exception& e) {
      return detail::error(400, std::string("move needs integer \"to\" and \"new_weight\": ") + e.what());
    }
    std::lock_guard lock(s->mutex);
    if (auto bad = check_history(*s)) return *bad;
    if (is_terminal(s->graph, s->state)) return detail::error(409, "game is over");
    if (!is_legal(s->graph, s->state, m)) return detail::error(409, "illegal move " + to_string(m));
    play(*s, m);
    return {200, summary(*s)};
  }

  Response engine_move(const std::string& id) {
    auto s = find(id);
    if (!s) return detail::error(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    if (auto bad = check_history(*s)) return *bad;
    if (is_terminal(s->graph, s->state)) return detail::error(409, "game is over");
    EngineChoice c;
    try {
      c = s->engine->choose(s->state);
    } catch (const budget_exceeded& e) {
      return detail::error(503, "oracle budget exceeded after " + std::to_string(e.states_visited) + " states");
    }
    play(*s, c.move);
    json out = summary(*s);
    out["engine_move"] = detail::move_json(c.move);
    out["strategy"] = c.source;
    return {200, out};
  }

  Response analysis(const std::string& id) {
    auto s = find(id);
    if (!s) return detail::error(404, "unknown game " + id);
    std::lock_guard lock(s->mutex);
    if (auto bad = check_history(*s)) return *bad;
    json out{{"id", s->id}, {"token", s->state.token}};
    json tags = json::array();
    for (const auto& t : detect(s->graph, s->state)) tags.push_back(nimgraph::to_string(t));
    out["tags"] = tags;
    const auto p = dispatch(s->graph, s->state);
    out["prediction"] = nimgraph::to_string(p.prediction);
    out["strategy"] = p.strategy;
    out["strategy_move"] = p.move ? detail::move_json(*p.move) : json(nullptr);
    try {
      const Analysis a = s->engine->solver().analyze(s->state);
      out["oracle"] = "ok";
      out["winner"] = detail::winner_label(a.winner);
      out["grundy"] = a.grundy;
      out["optimal_moves"] = detail::moves_json(a.optimal_moves);
      out["states_visited"] = a.states_visited;
    } catch (const budget_exceeded& e) {
      out["oracle"] = "unavailable";
      out["states_visited"] = e.states_visited;
    }
    return {200, out};
  }

  std::size_t session_count() const {
    std::lock_guard lock(registry_mutex_);
    return sessions_.size();
  }

 private:
  struct Slot {
    std::shared_ptr<GameSession> session;
    std::list<std::string>::iterator lru;
  };

  std::shared_ptr<GameSession> find(const std::string& id) {
    std::lock_guard lock(registry_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    lru_.splice(lru_.begin(), lru_, it->second.lru);
    return it->second.session;
  }

  static std::optional<Response> check_history(const GameSession& s) {
    GameState replay = fresh_state(s.graph);
    for (const Move& m : s.history) replay = apply_move(s.graph, replay, m);
    if (replay.token != s.state.token || replay.weights != s.state.weights) {
      return detail::error(500, "session state diverged from its history");
    }
    return std::nullopt;
  }

  static void play(GameSession& s, const Move& m) {
    s.state = apply_move(s.graph, s.state, m);
    s.history.push_back(m);
  }

  static json summary(const GameSession& s) {
    json edges = json::array();
    for (std::size_t i = 0; i < s.graph.edge_count(); ++i) {
      const Edge& e = s.graph.edge(i);
      edges.push_back({{"u", e.u}, {"v", e.v}, {"w", s.state.weights[i]}, {"initial", e.weight}});
    }
    const bool terminal = is_terminal(s.graph, s.state);
    const auto to_move = detail::player_to_move(s.history.size());
    return json{{"id", s.id},
                {"engine", to_string(s.engine->mode())},
                {"vertices", s.graph.vertex_count()},
                {"edges", edges},
                {"start", s.graph.start()},
                {"token", s.state.token},
                {"to_move", to_move},
                {"legal_moves", detail::moves_json(legal_moves(s.graph, s.state))},
                {"history", detail::moves_json(s.history)},
                {"terminal", terminal},
                {"loser", terminal ? json(to_move) : json(nullptr)}};
  }

  ServiceConfig config_;
  mutable std::mutex registry_mutex_;
  std::unordered_map<std::string, Slot> sessions_;
  std::list<std::string> lru_;  // front = most recently used
  std::uint64_t next_id_ = 0;
};

// Routes the five endpoints to `service`; serves `static_dir` at / when it
// exists.
inline void mount(httplib::Server& server, GameService& service, const std::string& static_dir = {}) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/api/games", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.create_game(req.body));
  });
  server.Get(R"(/api/games/([0-9a-f]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_game(req.matches[1]));
  });
  server.Post(R"(/api/games/([0-9a-f]+)/moves)",
              [&service, reply](const httplib::Request& req, httplib::Response& res) {
                reply(res, service.submit_move(req.matches[1], req.body));
              });
  server.Post(R"(/api/games/([0-9a-f]+)/engine-move)",
              [&service, reply](const httplib::Request& req, httplib::Response& res) {
                reply(res, service.engine_move(req.matches[1]));
              });
  server.Get(R"(/api/games/([0-9a-f]+)/analysis)",
             [&service, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, service.analysis(req.matches[1]));
             });
  if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace nimgraph::service
