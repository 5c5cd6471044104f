#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nimgraph {

struct graph_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct illegal_move : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parse_error : std::invalid_argument {
  parse_error(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(std::size_t visited)
      : std::runtime_error("state budget exceeded after " + std::to_string(visited) + " states"),
        states_visited(visited) {}
  std::size_t states_visited;
};

// A strategy was invoked on a position outside its precondition.
struct strategy_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nimgraph
