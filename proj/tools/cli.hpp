#pragma once

// nimgraph command line: solve, analyze, generate, verify, play, serve.
//
// Exit codes: 0 success / pass, 1 verification failure, 2 usage or input
// error, 3 state budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nimgraph/engine.hpp"
#include "nimgraph/generate.hpp"
#include "nimgraph/instance_io.hpp"
#include "nimgraph/service.hpp"
#include "nimgraph/solver.hpp"
#include "nimgraph/strategies.hpp"
#include "nimgraph/structures.hpp"
#include "nimgraph/verify.hpp"

namespace nimgraph::cli {

enum Exit { ok = 0, failed = 1, usage = 2, budget = 3 };

struct CliConfig {
  std::string command;
  std::string instance_path;
  std::string family;
  std::size_t size = 0;
  std::string weights = "uniform:1";
  Vertex start = 0;
  std::optional<Vertex> from;  // solve/analyze: override the instance's start
  std::size_t budget = std::size_t{1} << 25;
  std::uint64_t seed = 2009;
  std::string format = "table";
  std::string out;
  std::string suite;
  std::optional<std::size_t> max_n, max_j, samples;
  std::optional<Weight> weight_cap;
  unsigned threads = 0;
  bool dedup = false;
  bool line = false;
  std::string engine = "strategy";
  bool engine_first = false;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir = "webui/dist";
};

namespace detail {

inline std::string join_moves(const std::vector<Move>& ms) {
  if (ms.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? ", " : "") + to_string(ms[i]);
  return out;
}

inline GameState start_state(const GameGraph& g, const CliConfig& c) {
  return c.from ? fresh_state(g, *c.from) : fresh_state(g);
}

inline void print_analysis(std::ostream& out, Solver& solver, const GameState& s, bool line) {
  const Analysis a = solver.analyze(s);
  out << "winner: " << to_string(a.winner) << "\n"
      << "grundy: " << a.grundy << "\n"
      << "optimal moves: " << join_moves(a.optimal_moves) << "\n"
      << "states visited: " << a.states_visited << "\n";
  if (line) out << "best line: " << join_moves(solver.best_line(s)) << "\n";
}

inline int cmd_solve(const CliConfig& c, std::ostream& out, bool with_structure) {
  const GameGraph g = load_instance(c.instance_path);
  const GameState s = start_state(g, c);
  Solver solver(g, {c.budget});
  print_analysis(out, solver, s, c.line);
  if (with_structure) {
    out << "tags:";
    const auto tags = detect(g, s);
    if (tags.empty()) out << " none";
    for (const auto& t : tags) out << " " << to_string(t);
    out << "\n";
    const auto p = dispatch(g, s);
    out << "prediction: " << to_string(p.prediction) << " (strategy " << p.strategy;
    if (p.move) out << ", move " << to_string(*p.move);
    out << ")\n";
  }
  return ok;
}

inline int cmd_generate(const CliConfig& c, std::ostream& out) {
  const GameGraph g = generate({parse_family(c.family), c.size, parse_weight_spec(c.weights, c.seed), c.start});
  const std::string text = serialize_instance(g);
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
  }
  return ok;
}

inline int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  verify::SuiteOptions opt;
  opt.max_n = c.max_n;
  opt.max_j = c.max_j;
  opt.weight_cap = c.weight_cap;
  opt.samples = c.samples;
  opt.seed = c.seed;
  opt.budget = c.budget;
  opt.dedup = c.dedup;
  opt.threads = c.threads;

  std::vector<std::string> names{c.suite};
  if (c.suite == "all") names = verify::suite_names();
  bool pass = true;
  std::string text;
  for (const auto& name : names) {
    const auto r = verify::run_suite(name, opt);
    pass = pass && r.pass();
    if (c.format == "csv") {
      const auto csv = verify::to_csv(r);
      // one header for the whole run
      text += text.empty() ? csv : csv.substr(csv.find('\n') + 1);
    } else {
      text += (text.empty() ? "" : "\n") + verify::to_table(r);
    }
    err << name << ": " << (r.pass() ? "PASS" : "FAIL") << " in " << std::fixed << std::setprecision(2)
        << std::chrono::duration<double>(r.elapsed).count() << " s\n";
  }
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
  }
  return pass ? ok : failed;
}

inline void print_position(std::ostream& out, const GameGraph& g, const GameState& s, std::size_t ply) {
  out << (ply % 2 == 0 ? "P1" : "P2") << " to move, token on " << vertex_label(s.token) << "\n  edges:";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (s.weights[i] == 0) continue;
    out << " " << vertex_label(g.edge(i).u) << "-" << vertex_label(g.edge(i).v) << "=" << s.weights[i];
  }
  out << "\n";
}

// "<to> <new_weight>" with `to` a 0-based id or a vN label.
inline std::optional<Move> parse_move(const std::string& text) {
  std::istringstream in(text);
  std::string to;
  long long w = -1;
  if (!(in >> to >> w) || w < 0) return std::nullopt;
  std::string extra;
  if (in >> extra) return std::nullopt;
  long long v = -1;
  try {
    std::size_t used = 0;
    if (!to.empty() && (to[0] == 'v' || to[0] == 'V')) {
      v = std::stoll(to.substr(1), &used) - 1;
      ++used;
    } else {
      v = std::stoll(to, &used);
    }
    if (used != to.size() || v < 0) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return Move{static_cast<Vertex>(v), static_cast<Weight>(w)};
}

inline int cmd_play(const CliConfig& c, std::istream& in, std::ostream& out) {
  const GameGraph g = load_instance(c.instance_path);
  Engine engine(g, parse_engine_mode(c.engine), {c.budget});
  GameState s = fresh_state(g);
  const std::size_t engine_parity = c.engine_first ? 0 : 1;
  out << "moves: '<to> <new_weight>' (to as 0-based id or vN), 'hint', 'quit'\n";
  for (std::size_t ply = 0;; ++ply) {
    print_position(out, g, s, ply);
    if (is_terminal(g, s)) {
      out << (ply % 2 == 0 ? "P1" : "P2") << " cannot move and loses ("
          << (ply % 2 == engine_parity ? "engine" : "you") << ")\n";
      return ok;
    }
    if (ply % 2 == engine_parity) {
      const auto choice = engine.choose(s);
      out << "engine plays " << to_string(choice.move) << " [" << choice.source << "]\n";
      s = apply_move(g, s, choice.move);
      continue;
    }
    while (true) {
      out << "> " << std::flush;
      std::string text;
      if (!std::getline(in, text)) return ok;
      if (text == "quit") return ok;
      if (text == "hint") {
        const Analysis a = engine.solver().analyze(s);
        out << "winner: " << to_string(a.winner) << ", optimal: " << join_moves(a.optimal_moves) << "\n";
        continue;
      }
      const auto m = parse_move(text);
      if (!m || !is_legal(g, s, *m)) {
        out << "illegal move\n";
        continue;
      }
      s = apply_move(g, s, *m);
      break;
    }
  }
}

inline int cmd_serve(const CliConfig& c, std::ostream& err) {
  service::ServiceConfig cfg;
  cfg.budget = {c.budget};
  service::GameService svc(cfg);
  httplib::Server server;
  service::mount(server, svc, std::filesystem::is_directory(c.static_dir) ? c.static_dir : std::string());
  err << "listening on http://" << c.host << ":" << c.port << "\n";
  if (!server.listen(c.host, c.port)) {
    err << "cannot listen on port " << c.port << "\n";
    return usage;
  }
  return ok;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CliConfig c;
  CLI::App app{"Nim on weighted graphs: solver, strategies and verification", "nimgraph"};
  app.require_subcommand(1);
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "state budget for the solver")->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "winner, grundy value and optimal moves of an instance");
  solve->add_option("file", c.instance_path, "instance file")->required();
  solve->add_option("--from", c.from, "token vertex instead of the instance's start (0-based)");
  solve->add_flag("--line", c.line, "also print the principal variation");
  budget_opt(solve);

  auto* analyze = app.add_subcommand("analyze", "solve plus detected structures and the strategy prediction");
  analyze->add_option("file", c.instance_path, "instance file")->required();
  analyze->add_option("--from", c.from, "token vertex instead of the instance's start (0-based)");
  analyze->add_flag("--line", c.line, "also print the principal variation");
  budget_opt(analyze);

  auto* gen = app.add_subcommand("generate", "write an instance of a graph family");
  gen->add_option("--family", c.family, "path | cycle | complete | k2j | ssb")->required();
  auto* size_n = gen->add_option("--n", c.size, "size: edges for path, vertices for cycle/complete");
  auto* size_j = gen->add_option("--j", c.size, "leaf count for k2j/ssb");
  size_n->excludes(size_j);
  gen->add_option("--weights", c.weights, "uniform:k | list:a,b,... | random:cap")->capture_default_str();
  gen->add_option("--seed", c.seed, "seed for random weights")->capture_default_str();
  gen->add_option("--start", c.start, "start vertex (0-based)");
  gen->add_option("--out", c.out, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "run a verification suite; exit 0 iff it passes");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  ver->add_option("--suite", c.suite, "suite name")->required()->check(CLI::IsMember(suites));
  ver->add_option("--max-n", c.max_n, "largest n (paths: length, cycles/complete: order)");
  ver->add_option("--max-j", c.max_j, "largest j for k2j/ssb");
  ver->add_option("--weight-cap", c.weight_cap, "largest edge weight");
  ver->add_option("--samples", c.samples, "sample count where the suite samples");
  ver->add_option("--seed", c.seed, "seed")->capture_default_str();
  ver->add_option("--threads", c.threads, "worker threads (0 = hardware)");
  ver->add_flag("--dedup", c.dedup, "branch the adversary over identical-option classes only");
  ver->add_option("--format", c.format, "table | csv")->check(CLI::IsMember({"table", "csv"}))->capture_default_str();
  ver->add_option("--out", c.out, "output file (default stdout)");
  budget_opt(ver);

  auto* play = app.add_subcommand("play", "play an instance against the engine in the terminal");
  play->add_option("file", c.instance_path, "instance file")->required();
  play->add_option("--engine", c.engine, "oracle | strategy")
      ->check(CLI::IsMember({"oracle", "strategy"}))
      ->capture_default_str();
  play->add_flag("--engine-first", c.engine_first, "engine makes the first move");
  budget_opt(play);

  auto* serve = app.add_subcommand("serve", "start the HTTP service");
  serve->add_option("--port", c.port, "port")->capture_default_str();
  serve->add_option("--host", c.host, "bind address")->capture_default_str();
  serve->add_option("--static", c.static_dir, "directory served at /")->capture_default_str();
  budget_opt(serve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*solve) return detail::cmd_solve(c, out, false);
    if (*analyze) return detail::cmd_solve(c, out, true);
    if (*gen) return detail::cmd_generate(c, out);
    if (*ver) return detail::cmd_verify(c, out, err);
    if (*play) return detail::cmd_play(c, in, out);
    if (*serve) return detail::cmd_serve(c, err);
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace nimgraph::cli
