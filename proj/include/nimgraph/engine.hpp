#pragma once

// Move selection for the interactive front ends (terminal play, HTTP service).

#include <optional>
#include <string_view>

#include "nimgraph/graph.hpp"
#include "nimgraph/solver.hpp"
#include "nimgraph/strategies.hpp"

namespace nimgraph {

enum class EngineMode { Oracle, Strategy };

inline std::string_view to_string(EngineMode m) { return m == EngineMode::Oracle ? "oracle" : "strategy"; }

inline EngineMode parse_engine_mode(std::string_view s) {
  if (s == "oracle") return EngineMode::Oracle;
  if (s == "strategy") return EngineMode::Strategy;
  throw std::invalid_argument("engine must be 'oracle' or 'strategy'");
}

struct EngineChoice {
  Move move;
  std::string_view source;  // strategy name, or "oracle"
};

// Strategy mode: continue an SSB plan once opened, else dispatch, else the
// oracle. Oracle mode (and any position the strategies do not claim): first
// optimal move, or the first legal move when the position is lost.
class Engine {
 public:
  Engine(const GameGraph& g, EngineMode mode, SolveBudget budget = {}) : mode_(mode), solver_(g, budget) {}

  EngineMode mode() const { return mode_; }
  Solver& solver() { return solver_; }

  // Throws budget_exceeded when the oracle is needed and runs out of budget.
  EngineChoice choose(const GameState& s) {
    const GameGraph& g = solver_.graph();
    if (mode_ == EngineMode::Strategy) {
      if (plan_) {
        const auto r = ssb_strategy(g, s, *plan_);
        if (r.move && is_legal(g, s, *r.move)) return {*r.move, r.strategy};
        plan_.reset();
      }
      const auto r = dispatch(g, s);
      if (r.move) {
        if (r.strategy == "ssb") plan_ = ssb_hubs(g, s);
        return {*r.move, r.strategy};
      }
    }
    const Analysis a = solver_.analyze(s);
    if (!a.optimal_moves.empty()) return {a.optimal_moves.front(), "oracle"};
    return {legal_moves(g, s).front(), "oracle"};
  }

 private:
  EngineMode mode_;
  Solver solver_;
  std::optional<Hubs> plan_;
};

}  // namespace nimgraph
