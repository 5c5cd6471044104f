#pragma once

// Verification harness: strategy-vs-every-adversary playouts, predictor vs
// oracle sweeps and the even-cycle uniqueness audit.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "nimgraph/generate.hpp"
#include "nimgraph/graph.hpp"
#include "nimgraph/solver.hpp"
#include "nimgraph/strategies.hpp"
#include "nimgraph/structures.hpp"

namespace nimgraph::verify {

struct Failure {
  std::string instance;
  std::string state;
  std::string expected;
  std::string observed;
};

struct Row {
  std::string family;
  std::string params;
  Vertex start = 0;
  std::string prediction;
  std::string oracle;
  std::string verdict;
  std::size_t states_visited = 0;
};

struct VerificationReport {
  std::string suite;
  std::string ranges;
  std::size_t instances_checked = 0;
  std::vector<Failure> failures;
  std::vector<Row> rows;
  std::vector<std::string> notes;
  AuditReport audit;                     // memo audit over every solver the suite used
  std::set<Vertex> adversary_stuck_on;   // exhaustive playouts: where the adversary ran out of moves
  std::size_t states_explored = 0;       // exhaustive playouts: distinct (state, side) pairs
  std::chrono::steady_clock::duration elapsed{};

  bool pass() const { return failures.empty() && audit.ok(); }

  void absorb(VerificationReport&& o) {
    instances_checked += o.instances_checked;
    for (auto& f : o.failures) failures.push_back(std::move(f));
    for (auto& r : o.rows) rows.push_back(std::move(r));
    for (auto& n : o.notes) notes.push_back(std::move(n));
    audit += o.audit;
    adversary_stuck_on.insert(o.adversary_stuck_on.begin(), o.adversary_stuck_on.end());
    states_explored += o.states_explored;
  }
};

inline std::string describe(const GameState& s) {
  std::string out = "token=" + vertex_label(s.token) + " w=";
  for (std::size_t i = 0; i < s.weights.size(); ++i) out += (i ? "." : "") + std::to_string(s.weights[i]);
  return out;
}

inline std::string weights_param(const GameGraph& g) {
  std::string out = "w=";
  for (std::size_t i = 0; i < g.edge_count(); ++i) out += (i ? "." : "") + std::to_string(g.edge(i).weight);
  return out;
}

inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "family,params,start,prediction,oracle,verdict,states_visited\n";
  for (const Row& row : r.rows) {
    out << row.family << ',' << row.params << ',' << row.start << ',' << row.prediction << ',' << row.oracle << ','
        << row.verdict << ',' << row.states_visited << '\n';
  }
  return out.str();
}

// Wall-clock time is left out unless asked for, so the table is reproducible.
inline std::string to_table(const VerificationReport& r, bool with_elapsed = false) {
  std::ostringstream out;
  const double secs = std::chrono::duration<double>(r.elapsed).count();
  out << "suite:       " << r.suite << "\n"
      << "ranges:      " << r.ranges << "\n"
      << "instances:   " << r.instances_checked << "\n"
      << "memo audit:  " << r.audit.entries_checked << " entries, " << r.audit.coherence_violations
      << " coherence / " << r.audit.mex_violations << " mex violations\n"
      << "failures:    " << r.failures.size() << "\n";
  if (with_elapsed) out << "elapsed:     " << std::fixed << std::setprecision(2) << secs << " s\n";
  out << "verdict:     " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& n : r.notes) out << "note:        " << n << "\n";
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& f = r.failures[i];
    out << "  FAIL " << f.instance << " [" << f.state << "] expected " << f.expected << ", observed " << f.observed
        << "\n";
  }
  if (r.failures.size() > shown) out << "  ... " << (r.failures.size() - shown) << " more\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Exhaustive strategy verification

enum class Claimer { Mover, Defender };

// Returns the claiming player's move, or nullopt when the strategy makes no
// claim in this position.
using Player = std::function<std::optional<Move>(const GameState&)>;

// Returns a violation message when a claimer move breaks a side condition.
using MoveCheck = std::function<std::optional<std::string>(const GameState&, const Move&)>;

struct ExhaustiveOptions {
  std::size_t max_states = std::size_t{1} << 25;
  // Branch the adversary over one representative per identical-option class
  // instead of every option.
  bool dedup_identical_options = false;
  MoveCheck move_check;
  std::size_t max_failures = 16;
};

// The claimer always plays the strategy's move; the adversary branches over
// every legal move. Passes iff every line ends with the adversary to move and
// no move available.
inline VerificationReport verify_strategy_exhaustive(const GameGraph& g, const GameState& start, Claimer claimer,
                                                     const Player& player, const ExhaustiveOptions& opt = {},
                                                     std::string instance = "") {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "exhaustive";
  report.instances_checked = 1;
  if (opt.dedup_identical_options) report.notes.push_back("adversary branching deduplicated by identical options");

  std::unordered_map<std::string, bool> seen;
  auto fail = [&](const GameState& s, std::string expected, std::string observed) {
    if (report.failures.size() < opt.max_failures) {
      report.failures.push_back({instance, describe(s), std::move(expected), std::move(observed)});
    }
    return false;
  };

  auto explore = [&](auto&& self, const GameState& s, bool claimer_to_move) -> bool {
    std::string key = describe(s);
    key.push_back(claimer_to_move ? 'C' : 'A');
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    if (seen.size() >= opt.max_states) throw budget_exceeded(seen.size());
    seen.emplace(key, true);

    bool ok = true;
    if (claimer_to_move) {
      if (is_terminal(g, s)) {
        ok = fail(s, "claimer has a move", "claimer stuck");
      } else if (const auto m = player(s); !m) {
        ok = fail(s, "strategy move", "NoClaim");
      } else if (!is_legal(g, s, *m)) {
        ok = fail(s, "legal move", "illegal " + to_string(*m));
      } else if (auto violation = opt.move_check ? opt.move_check(s, *m) : std::nullopt) {
        ok = fail(s, "move satisfying side condition", *violation);
      } else {
        ok = self(self, apply_move(g, s, *m), false);
      }
    } else if (is_terminal(g, s)) {
      report.adversary_stuck_on.insert(s.token);
    } else {
      std::vector<Move> moves;
      if (opt.dedup_identical_options) {
        for (const auto& cls : identical_options(g, s)) {
          const auto e = g.find_edge(s.token, cls.front());
          for (Weight k = 0; k < s.weights[e]; ++k) moves.push_back({cls.front(), k});
        }
      } else {
        moves = legal_moves(g, s);
      }
      for (const Move& m : moves) ok = self(self, apply_move(g, s, m), true) && ok;
    }
    seen[key] = ok;
    return ok;
  };

  explore(explore, start, claimer == Claimer::Mover);
  report.states_explored = seen.size();
  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

// Plays the closed-form strategy for cycles and paths: odd cycle, even cycle
// (which itself hands broken cycles to the path strategy), or path.
inline Player cycle_path_player(const GameGraph& g) {
  return [&g](const GameState& s) -> std::optional<Move> {
    const PositiveView view(g, s);
    StrategyResult r;
    if (view.is_cycle()) {
      r = view.vertices().size() % 2 ? odd_cycle_strategy(g, s) : even_cycle_strategy(g, s);
    } else if (view.is_spider()) {
      r = path_strategy(g, s);
    }
    return r.prediction == Prediction::P1Wins ? r.move : std::nullopt;
  };
}

inline Player ssb_player(const GameGraph& g, Hubs hubs) {
  return [&g, hubs](const GameState& s) { return ssb_strategy(g, s, hubs).move; };
}

inline Player k2j_defender(const GameGraph& g, Hubs hubs) {
  return [&g, hubs](const GameState& s) { return k2j_defender_reply(g, s, hubs); };
}

// Claimer moves must use an edge incident to a hub.
inline MoveCheck ssb_confinement(Hubs hubs) {
  return [hubs](const GameState& s, const Move& m) -> std::optional<std::string> {
    if (s.token == hubs.a || s.token == hubs.b || m.to == hubs.a || m.to == hubs.b) return std::nullopt;
    return "edge " + vertex_label(s.token) + "-" + vertex_label(m.to) + " leaves the SSB subgraph";
  };
}

// ---------------------------------------------------------------------------
// Instance enumeration and parallel execution

// All vectors in [1, cap]^n, first coordinate varying fastest.
inline std::vector<std::vector<Weight>> all_weightings(std::size_t n, Weight cap) {
  std::vector<std::vector<Weight>> out;
  std::vector<Weight> w(n, 1);
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < n && w[i] == cap) w[i++] = 1;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

inline std::vector<std::vector<Weight>> sampled_weightings(std::size_t n, Weight cap, std::size_t count,
                                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> dist(1, cap);
  std::vector<std::vector<Weight>> out(count, std::vector<Weight>(n));
  for (auto& w : out)
    for (auto& x : w) x = dist(rng);
  return out;
}

// Runs fn(i) for i in [0, n) on a small thread pool and merges the partial
// reports in index order, so the result does not depend on scheduling.
template <class Fn>
VerificationReport run_instances(std::size_t n, Fn fn, unsigned threads = 0) {
  std::vector<VerificationReport> parts(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        parts[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  VerificationReport merged;
  for (auto& p : parts) merged.absorb(std::move(p));
  return merged;
}

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions {
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_j;
  std::optional<Weight> weight_cap;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 2009;
  std::size_t budget = std::size_t{1} << 25;
  bool dedup = false;
  unsigned threads = 0;
};

namespace detail {

inline ExhaustiveOptions playout_options(const SuiteOptions& opt) {
  ExhaustiveOptions eo;
  eo.max_states = opt.budget;
  eo.dedup_identical_options = opt.dedup;
  return eo;
}

inline std::string winner_label(Winner w) { return w == Winner::Mover ? "MoverWins" : "OpponentWins"; }

inline bool agrees(Prediction p, Winner w) {
  return p == Prediction::NoClaim || (p == Prediction::P1Wins) == (w == Winner::Mover);
}

inline void finish(VerificationReport& r, std::string suite, std::string ranges,
                   std::chrono::steady_clock::time_point t0) {
  r.suite = std::move(suite);
  r.ranges = std::move(ranges);
  r.elapsed = std::chrono::steady_clock::now() - t0;
}

// Absorbs an exhaustive playout into an instance report; the playout's
// failures are already labelled with the instance name.
inline void absorb_playout(VerificationReport& into, VerificationReport&& playout) {
  playout.instances_checked = 0;
  playout.notes.clear();
  into.absorb(std::move(playout));
}

}  // namespace detail

// For every instance and start: dispatch's prediction (when it claims) must
// equal the oracle's winner.
inline VerificationReport sweep_predictor_vs_oracle(const std::vector<GameGraph>& instances, std::string family,
                                                    const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = run_instances(
      instances.size(),
      [&](std::size_t i) {
        VerificationReport part;
        const GameGraph& g = instances[i];
        Solver solver(g, {opt.budget});
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const auto s = fresh_state(g, v);
          const Winner w = solver.winner(s);
          const auto p = dispatch(g, s);
          const bool ok = detail::agrees(p.prediction, w);
          if (!ok) part.failures.push_back({family + " " + weights_param(g), describe(s),
                                            detail::winner_label(w), std::string(to_string(p.prediction))});
          part.rows.push_back({family, weights_param(g), v, std::string(to_string(p.prediction)),
                               detail::winner_label(w), ok ? "ok" : "FAIL", solver.states_visited()});
          ++part.instances_checked;
        }
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  detail::finish(r, "predictor-vs-oracle", family + ", " + std::to_string(instances.size()) + " graphs, all starts",
                 t0);
  return r;
}

// Unit paths of 1..max_n edges, every start: oracle vs the parity rule and
// vs the path strategy; the strategy is also played out exhaustively.
inline VerificationReport paths_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t max_len = opt.max_n.value_or(12);
  auto r = run_instances(
      max_len,
      [&](std::size_t i) {
        VerificationReport part;
        const std::size_t len = i + 1;
        const GameGraph g = path(len);
        Solver solver(g, {opt.budget});
        for (Vertex v = 0; v <= len; ++v) {
          const auto s = fresh_state(g, v);
          const Winner w = solver.winner(s);
          const std::string name = "path(" + std::to_string(len) + ") from " + vertex_label(v);
          const bool parity = (v % 2 == 1) || ((len - v) % 2 == 1);
          const auto p = path_strategy(g, s);
          bool ok = true;
          if (parity != (w == Winner::Mover)) {
            ok = false;
            part.failures.push_back({name, describe(s), parity ? "MoverWins" : "OpponentWins", detail::winner_label(w)});
          }
          if (!detail::agrees(p.prediction, w)) {
            ok = false;
            part.failures.push_back({name, describe(s), detail::winner_label(w), std::string(to_string(p.prediction))});
          }
          if (p.prediction == Prediction::P1Wins) {
            auto play = verify_strategy_exhaustive(g, s, Claimer::Mover, cycle_path_player(g),
                                                   detail::playout_options(opt), name);
            ok = ok && play.pass();
            detail::absorb_playout(part, std::move(play));
          }
          part.rows.push_back({"path", "len=" + std::to_string(len), v, std::string(to_string(p.prediction)),
                               detail::winner_label(w), ok ? "ok" : "FAIL", solver.states_visited()});
          ++part.instances_checked;
        }
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  detail::finish(r, "paths", "unit paths, lengths 1.." + std::to_string(max_len) + ", all starts", t0);
  return r;
}

namespace detail {

// Cycles of each length in `lengths`: exhaustive weightings up to
// `exhaustive_up_to`, seeded samples beyond.
inline std::vector<GameGraph> cycle_instances(const std::vector<std::size_t>& lengths, Weight cap,
                                              std::size_t exhaustive_up_to, std::size_t samples, std::uint64_t seed) {
  std::vector<GameGraph> out;
  for (std::size_t n : lengths) {
    const auto weightings =
        n <= exhaustive_up_to ? all_weightings(n, cap) : sampled_weightings(n, cap, samples, seed + n);
    for (const auto& w : weightings) out.push_back(cycle(n, ExplicitWeights{w}));
  }
  return out;
}

}  // namespace detail

// Odd cycles: the mover always wins, and the odd-cycle strategy (followed by
// the path strategy) survives every adversary line.
inline VerificationReport odd_cycles_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t max_n = opt.max_n.value_or(11);
  const Weight cap = opt.weight_cap.value_or(3);
  const std::size_t samples = opt.samples.value_or(300);
  std::vector<std::size_t> lengths;
  for (std::size_t n = 3; n <= max_n; n += 2) lengths.push_back(n);
  const auto instances = detail::cycle_instances(lengths, cap, 5, samples, opt.seed);

  auto r = run_instances(
      instances.size(),
      [&](std::size_t i) {
        VerificationReport part;
        const GameGraph& g = instances[i];
        const std::string family = "cycle(" + std::to_string(g.vertex_count()) + ")";
        Solver solver(g, {opt.budget});
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const auto s = fresh_state(g, v);
          const Winner w = solver.winner(s);
          const auto p = odd_cycle_strategy(g, s);
          const std::string name = family + " " + weights_param(g) + " from " + vertex_label(v);
          bool ok = w == Winner::Mover && detail::agrees(p.prediction, w);
          if (!ok) part.failures.push_back({name, describe(s), "MoverWins", detail::winner_label(w)});
          auto play =
              verify_strategy_exhaustive(g, s, Claimer::Mover, cycle_path_player(g), detail::playout_options(opt), name);
          ok = ok && play.pass();
          detail::absorb_playout(part, std::move(play));
          part.rows.push_back({family, weights_param(g), v, std::string(to_string(p.prediction)),
                               detail::winner_label(w), ok ? "ok" : "FAIL", solver.states_visited()});
          ++part.instances_checked;
        }
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  detail::finish(r, "odd-cycles",
                 "C3..C" + std::to_string(max_n) + ", weights 1.." + std::to_string(cap) +
                     ", exhaustive up to C5, " + std::to_string(samples) + " samples beyond",
                 t0);
  return r;
}

// Even cycles: reduced-graph prediction vs oracle on every instance; the
// strategy is played out for the winning side (mover or defender).
inline VerificationReport even_cycles_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<GameGraph> instances;
  std::string ranges;
  if (opt.max_n || opt.weight_cap || opt.samples) {
    const std::size_t n = opt.max_n.value_or(4);
    const Weight cap = opt.weight_cap.value_or(3);
    instances = detail::cycle_instances({n}, cap, opt.samples ? 0 : n, opt.samples.value_or(0), opt.seed);
    ranges = "C" + std::to_string(n) + ", weights 1.." + std::to_string(cap) +
             (opt.samples ? ", " + std::to_string(*opt.samples) + " samples" : ", exhaustive");
  } else {
    for (auto& g : detail::cycle_instances({4}, 4, 4, 0, opt.seed)) instances.push_back(std::move(g));
    for (auto& g : detail::cycle_instances({6}, 3, 6, 0, opt.seed)) instances.push_back(std::move(g));
    for (auto& g : detail::cycle_instances({8}, 4, 0, 200, opt.seed)) instances.push_back(std::move(g));
    ranges = "C4 weights 1..4 exhaustive, C6 weights 1..3 exhaustive, C8 weights 1..4 200 samples";
  }

  auto r = run_instances(
      instances.size(),
      [&](std::size_t i) {
        VerificationReport part;
        const GameGraph& g = instances[i];
        const std::string family = "cycle(" + std::to_string(g.vertex_count()) + ")";
        Solver solver(g, {opt.budget});
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const auto s = fresh_state(g, v);
          const Winner w = solver.winner(s);
          const auto p = even_cycle_strategy(g, s);
          const std::string name = family + " " + weights_param(g) + " from " + vertex_label(v);
          bool ok = detail::agrees(p.prediction, w) && p.prediction != Prediction::NoClaim;
          if (!ok) {
            part.failures.push_back({name, describe(s), detail::winner_label(w), std::string(to_string(p.prediction))});
          }
          const Claimer side = p.prediction == Prediction::P1Wins ? Claimer::Mover : Claimer::Defender;
          auto play = verify_strategy_exhaustive(g, s, side, cycle_path_player(g), detail::playout_options(opt), name);
          ok = ok && play.pass();
          detail::absorb_playout(part, std::move(play));
          part.rows.push_back({family, weights_param(g), v, std::string(to_string(p.prediction)),
                               detail::winner_label(w), ok ? "ok" : "FAIL", solver.states_visited()});
          ++part.instances_checked;
        }
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  detail::finish(r, "even-cycles", ranges, t0);
  return r;
}

// On every mover-winning even cycle the oracle's winning first moves must be
// exactly the prescribed ones (reduce the odd option's first edge to m).
// Instances with one odd option and with two are counted separately.
inline VerificationReport audit_even_cycle_uniqueness(const std::vector<GameGraph>& instances, std::string ranges,
                                                      const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Counts {
    std::size_t single = 0, single_bad = 0, twin = 0, twin_bad = 0, not_optimal = 0;
  };
  std::vector<Counts> counts(instances.size());
  auto r = run_instances(
      instances.size(),
      [&](std::size_t i) {
        VerificationReport part;
        const GameGraph& g = instances[i];
        const std::string family = "cycle(" + std::to_string(g.vertex_count()) + ")";
        Solver solver(g, {opt.budget});
        Counts& c = counts[i];
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const auto s = fresh_state(g, v);
          const Analysis a = solver.analyze(s);
          const auto prescribed = even_cycle_prescribed_moves(g, s);
          const std::string name = family + " " + weights_param(g) + " from " + vertex_label(v);
          auto list = [](const std::vector<Move>& ms) {
            std::string out = "{";
            for (std::size_t k = 0; k < ms.size(); ++k) out += (k ? ", " : "") + to_string(ms[k]);
            return out + "}";
          };
          bool ok = true;
          if (a.winner == Winner::Mover) {
            for (const Move& m : prescribed)
              if (std::find(a.optimal_moves.begin(), a.optimal_moves.end(), m) == a.optimal_moves.end()) {
                ++c.not_optimal;
                ok = false;
              }
            const bool exact = prescribed == a.optimal_moves;
            if (prescribed.size() == 1) {
              ++c.single;
              c.single_bad += !exact;
            } else {
              ++c.twin;
              c.twin_bad += !exact;
            }
            ok = ok && exact;
            if (!ok) {
              part.failures.push_back({name, describe(s), "winning moves " + list(prescribed),
                                       "winning moves " + list(a.optimal_moves)});
            }
          } else if (!prescribed.empty() || !a.optimal_moves.empty()) {
            ok = false;
            part.failures.push_back({name, describe(s), "no winning move", "winning moves " + list(a.optimal_moves)});
          }
          part.rows.push_back({family, weights_param(g), v, prescribed.empty() ? "P2Wins" : "P1Wins",
                               detail::winner_label(a.winner), ok ? "ok" : "FAIL", solver.states_visited()});
          ++part.instances_checked;
        }
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  Counts total;
  for (const auto& c : counts) {
    total.single += c.single;
    total.single_bad += c.single_bad;
    total.twin += c.twin;
    total.twin_bad += c.twin_bad;
    total.not_optimal += c.not_optimal;
  }
  r.notes.push_back("one odd option: " + std::to_string(total.single - total.single_bad) + "/" +
                    std::to_string(total.single) + " unique");
  r.notes.push_back("two odd options: " + std::to_string(total.twin - total.twin_bad) + "/" +
                    std::to_string(total.twin) + " with exactly the two prescribed moves winning");
  r.notes.push_back("prescribed moves that are not oracle-optimal: " + std::to_string(total.not_optimal));
  detail::finish(r, "uniqueness", std::move(ranges), t0);
  return r;
}

inline VerificationReport uniqueness_suite(const SuiteOptions& opt = {}) {
  if (opt.max_n || opt.weight_cap) {
    const std::size_t n = opt.max_n.value_or(4);
    const Weight cap = opt.weight_cap.value_or(3);
    return audit_even_cycle_uniqueness(detail::cycle_instances({n}, cap, n, 0, opt.seed),
                                       "C" + std::to_string(n) + ", weights 1.." + std::to_string(cap), opt);
  }
  auto instances = detail::cycle_instances({4}, 4, 4, 0, opt.seed);
  for (auto& g : detail::cycle_instances({6}, 3, 6, 0, opt.seed)) instances.push_back(std::move(g));
  return audit_even_cycle_uniqueness(instances, "C4 weights 1..4, C6 weights 1..3, exhaustive", opt);
}

// Unit K_{2,j} from either hub: the mover loses, and the defender's
// return-to-hub reply wins every line.
inline VerificationReport k2j_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t max_j = opt.max_j.value_or(6);
  auto r = run_instances(
      max_j,
      [&](std::size_t i) {
        VerificationReport part;
        const std::size_t j = i + 1;
        const GameGraph g = complete_bipartite_2(j);
        Solver solver(g, {opt.budget});
        for (Vertex v : {Vertex{0}, Vertex{1}}) {
          const auto s = fresh_state(g, v);
          const Winner w = solver.winner(s);
          const auto p = k2j_strategy(g, s);
          const std::string name = "K2," + std::to_string(j) + " from " + vertex_label(v);
          bool ok = w == Winner::Opponent && detail::agrees(p.prediction, w);
          if (!ok) part.failures.push_back({name, describe(s), "OpponentWins", detail::winner_label(w)});
          auto play = verify_strategy_exhaustive(g, s, Claimer::Defender, k2j_defender(g, k2j_hubs(g, s)),
                                                 detail::playout_options(opt), name);
          ok = ok && play.pass();
          detail::absorb_playout(part, std::move(play));
          part.rows.push_back({"k2j", "j=" + std::to_string(j), v, std::string(to_string(p.prediction)),
                               detail::winner_label(w), ok ? "ok" : "FAIL", solver.states_visited()});
          ++part.instances_checked;
        }
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  detail::finish(r, "k2j", "unit K2,j, j=1.." + std::to_string(max_j) + ", hub starts", t0);
  return r;
}

namespace detail {

// Every start must be a mover win. From starts on a mutually adjacent pair the
// SSB strategy is also played out, with confinement and (optionally) the
// expected stuck hub checked.
inline VerificationReport ssb_instance(const GameGraph& g, const std::string& family, const std::string& params,
                                       const SuiteOptions& opt, bool check_parity) {
  VerificationReport part;
  Solver solver(g, {opt.budget});
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto s = fresh_state(g, v);
    const Winner w = solver.winner(s);
    const std::string name = family + " " + params + " from " + vertex_label(v);
    bool ok = w == Winner::Mover;
    if (!ok) part.failures.push_back({name, describe(s), "MoverWins", winner_label(w)});
    std::string prediction = "NoClaim";
    if (const auto tag = unit_mutual_pair(g, s)) {
      const auto p = ssb_strategy(g, s);
      prediction = std::string(to_string(p.prediction));
      const Hubs hubs{tag->a, tag->b};
      ExhaustiveOptions eo = playout_options(opt);
      eo.move_check = ssb_confinement(hubs);
      auto play = verify_strategy_exhaustive(g, s, Claimer::Mover, ssb_player(g, hubs), eo, name);
      if (check_parity && play.pass()) {
        // Even order: adversary ends on the partner hub; odd order: on the start hub.
        const Vertex expected = g.vertex_count() % 2 == 0 ? hubs.b : hubs.a;
        if (play.adversary_stuck_on != std::set<Vertex>{expected}) {
          std::string seen;
          for (Vertex x : play.adversary_stuck_on) seen += vertex_label(x) + " ";
          play.failures.push_back({name, describe(s), "adversary stuck on " + vertex_label(expected),
                                   "stuck on " + seen});
        }
      }
      ok = ok && play.pass();
      absorb_playout(part, std::move(play));
    }
    part.rows.push_back({family, params, v, prediction, winner_label(w), ok ? "ok" : "FAIL", solver.states_visited()});
    ++part.instances_checked;
  }
  part.audit = solver.audit();
  return part;
}

}  // namespace detail

inline VerificationReport ssb_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t max_j = opt.max_j.value_or(6);
  auto r = run_instances(
      max_j,
      [&](std::size_t i) { return detail::ssb_instance(ssb(i + 1), "ssb", "j=" + std::to_string(i + 1), opt, false); },
      opt.threads);
  detail::finish(r, "ssb", "unit SSB_j, j=1.." + std::to_string(max_j) + ", every start", t0);
  return r;
}

inline VerificationReport complete_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t max_n = opt.max_n.value_or(7);
  auto r = run_instances(
      max_n - 1,
      [&](std::size_t i) {
        return detail::ssb_instance(complete(i + 2), "complete", "n=" + std::to_string(i + 2), opt, true);
      },
      opt.threads);
  detail::finish(r, "complete", "unit K_n, n=2.." + std::to_string(max_n) + ", every start", t0);
  return r;
}

// Random unit graphs with a planted mutually adjacent pair, token on the pair.
inline VerificationReport mutual_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t count = opt.samples.value_or(100);
  const std::size_t max_n = opt.max_n.value_or(8);
  struct Spec {
    std::size_t n, k;
    std::uint64_t seed;
  };
  std::vector<Spec> specs;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n - 2)(rng);
    specs.push_back({n, k, rng()});
  }
  auto r = run_instances(
      count,
      [&](std::size_t i) {
        VerificationReport part;
        const auto& sp = specs[i];
        const GameGraph g = planted_mutual_pair(sp.n, sp.k, 0.5, sp.seed);
        const std::string params = "n=" + std::to_string(sp.n) + ";k=" + std::to_string(sp.k) + ";m=" +
                                   std::to_string(g.edge_count()) + ";seed=" + std::to_string(sp.seed);
        Solver solver(g, {opt.budget});
        const auto s = fresh_state(g);
        const Winner w = solver.winner(s);
        const std::string name = "mutual " + params;
        bool ok = w == Winner::Mover;
        if (!ok) part.failures.push_back({name, describe(s), "MoverWins", detail::winner_label(w)});
        const auto p = ssb_strategy(g, s);
        const Hubs hubs = ssb_hubs(g, s);
        ExhaustiveOptions eo = detail::playout_options(opt);
        eo.move_check = ssb_confinement(hubs);
        auto play = verify_strategy_exhaustive(g, s, Claimer::Mover, ssb_player(g, hubs), eo, name);
        ok = ok && play.pass();
        detail::absorb_playout(part, std::move(play));
        part.rows.push_back({"mutual", params, 0, std::string(to_string(p.prediction)), detail::winner_label(w),
                             ok ? "ok" : "FAIL", solver.states_visited()});
        ++part.instances_checked;
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  detail::finish(r, "mutual",
                 std::to_string(count) + " random unit graphs on 3.." + std::to_string(max_n) +
                     " vertices with a planted mutually adjacent pair",
                 t0);
  return r;
}

// Oracle-only check that the mover wins K_n under arbitrary weights: K_3 and
// K_4 exhaustively, K_5 and beyond by seeded sampling.
inline VerificationReport check_complete_arbitrary_weights(std::size_t max_n, Weight cap, std::size_t samples,
                                                           std::uint64_t seed, const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<GameGraph> instances;
  for (std::size_t n = 3; n <= max_n; ++n) {
    const std::size_t e = n * (n - 1) / 2;
    const auto ws = n <= 4 ? all_weightings(e, cap) : sampled_weightings(e, cap, samples, seed + n);
    for (const auto& w : ws) instances.push_back(complete(n, ExplicitWeights{w}));
  }
  auto r = run_instances(
      instances.size(),
      [&](std::size_t i) {
        VerificationReport part;
        const GameGraph& g = instances[i];
        const std::string family = "complete(" + std::to_string(g.vertex_count()) + ")";
        Solver solver(g, {opt.budget});
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const auto s = fresh_state(g, v);
          const Winner w = solver.winner(s);
          const bool ok = w == Winner::Mover;
          if (!ok) {
            part.failures.push_back({family + " " + weights_param(g) + " from " + vertex_label(v), describe(s),
                                     "MoverWins", detail::winner_label(w)});
          }
          part.rows.push_back({family, weights_param(g), v, "NoClaim", detail::winner_label(w), ok ? "ok" : "FAIL",
                               solver.states_visited()});
          ++part.instances_checked;
        }
        part.audit = solver.audit();
        return part;
      },
      opt.threads);
  detail::finish(r, "complete-weighted",
                 "K3..K" + std::to_string(max_n) + ", weights 1.." + std::to_string(cap) +
                     ", exhaustive up to K4, " + std::to_string(samples) + " samples beyond",
                 t0);
  return r;
}

inline VerificationReport complete_weighted_suite(const SuiteOptions& opt = {}) {
  return check_complete_arbitrary_weights(opt.max_n.value_or(5), opt.weight_cap.value_or(3), opt.samples.value_or(500),
                                          opt.seed, opt);
}

// The worked examples: two C_4 weightings with opposite winners and the C_6
// whose prescribed first move is checked against the oracle.
inline VerificationReport goldens_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  auto add = [&](const GameGraph& g, const std::string& family, Winner expected) {
    Solver solver(g, {opt.budget});
    const auto s = fresh_state(g);
    const Analysis a = solver.analyze(s);
    const auto p = dispatch(g, s);
    bool ok = a.winner == expected && detail::agrees(p.prediction, a.winner);
    if (!ok) r.failures.push_back({family, describe(s), detail::winner_label(expected), detail::winner_label(a.winner)});
    const Claimer side = a.winner == Winner::Mover ? Claimer::Mover : Claimer::Defender;
    auto play = verify_strategy_exhaustive(g, s, side, cycle_path_player(g), detail::playout_options(opt), family);
    ok = ok && play.pass();
    detail::absorb_playout(r, std::move(play));
    r.rows.push_back({family, weights_param(g), g.start(), std::string(to_string(p.prediction)),
                      detail::winner_label(a.winner), ok ? "ok" : "FAIL", solver.states_visited()});
    ++r.instances_checked;
    r.audit += solver.audit();
    return a;
  };
  add(golden::c4_mover_wins(), "c4-mover-wins", Winner::Mover);
  add(golden::c4_mover_loses(), "c4-mover-loses", Winner::Opponent);
  const GameGraph c6 = golden::c6_reduced_odd_path();
  const Analysis a = add(c6, "c6-reduced-odd-path", Winner::Mover);
  const auto p = even_cycle_strategy(c6, fresh_state(c6));
  const Move expected{1, 2};
  if (!p.move || *p.move != expected) {
    r.failures.push_back({"c6-reduced-odd-path", describe(fresh_state(c6)), "first move " + to_string(expected),
                          p.move ? to_string(*p.move) : "none"});
  }
  if (std::find(a.optimal_moves.begin(), a.optimal_moves.end(), expected) == a.optimal_moves.end()) {
    r.failures.push_back({"c6-reduced-odd-path", describe(fresh_state(c6)), "prescribed move oracle-optimal",
                          "not optimal"});
  }
  detail::finish(r, "goldens", "worked examples", t0);
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paths", "odd-cycles", "even-cycles", "uniqueness", "goldens",
                                              "k2j",   "ssb",        "complete",    "mutual",     "complete-weighted"};
  return names;
}

inline VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {}) {
  if (name == "paths") return paths_suite(opt);
  if (name == "odd-cycles") return odd_cycles_suite(opt);
  if (name == "even-cycles") return even_cycles_suite(opt);
  if (name == "uniqueness") return uniqueness_suite(opt);
  if (name == "goldens") return goldens_suite(opt);
  if (name == "k2j") return k2j_suite(opt);
  if (name == "ssb") return ssb_suite(opt);
  if (name == "complete") return complete_suite(opt);
  if (name == "mutual") return mutual_suite(opt);
  if (name == "complete-weighted") return complete_weighted_suite(opt);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace nimgraph::verify
