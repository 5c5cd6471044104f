#pragma once

// Exhaustive memoized solver: Grundy value and win/loss label for every
// position reachable from the queried one.
//
// The win label is computed from the children's win labels (a position is won
// iff some child is lost), independently of the mex that yields the Grundy
// value, so the two can be cross-checked on every stored entry.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "nimgraph/error.hpp"
#include "nimgraph/graph.hpp"
#include "nimgraph/memo.hpp"

namespace nimgraph {

enum class Winner { Mover, Opponent };

inline std::string_view to_string(Winner w) {
  return w == Winner::Mover ? "mover (p-position)" : "opponent (0-position)";
}

struct SolveBudget {
  std::size_t max_states = std::size_t{1} << 25;
};

struct Analysis {
  Winner winner = Winner::Opponent;
  std::uint32_t grundy = 0;
  std::vector<Move> optimal_moves;  // moves to grundy-0 children, legal_moves order
  std::size_t states_visited = 0;
};

struct AuditReport {
  std::size_t entries_checked = 0;
  std::size_t coherence_violations = 0;  // win label disagrees with grundy > 0
  std::size_t mex_violations = 0;        // grundy is not the mex of the children
  std::size_t missing_children = 0;
  bool ok() const { return coherence_violations == 0 && mex_violations == 0 && missing_children == 0; }

  AuditReport& operator+=(const AuditReport& o) {
    entries_checked += o.entries_checked;
    coherence_violations += o.coherence_violations;
    mex_violations += o.mex_violations;
    missing_children += o.missing_children;
    return *this;
  }
};

namespace detail {

// Bitset of child grundy values, sized to the move count (the mex can never
// exceed it).
class MexSet {
 public:
  explicit MexSet(std::size_t moves) : limit_(moves) {
    if (moves >= 64) wide_.assign(moves / 64 + 1, 0);
  }

  void mark(std::uint32_t g) {
    if (g > limit_) return;
    if (wide_.empty()) {
      narrow_ |= std::uint64_t{1} << g;
    } else {
      wide_[g / 64] |= std::uint64_t{1} << (g % 64);
    }
  }

  std::uint32_t mex() const {
    if (wide_.empty()) return static_cast<std::uint32_t>(std::countr_one(narrow_));
    std::uint32_t base = 0;
    for (std::uint64_t word : wide_) {
      if (word != UINT64_MAX) return base + static_cast<std::uint32_t>(std::countr_one(word));
      base += 64;
    }
    return base;
  }

 private:
  std::size_t limit_;
  std::uint64_t narrow_ = 0;
  std::vector<std::uint64_t> wide_;
};

}  // namespace detail

template <class Table>
class basic_solver {
 public:
  using codec_type = typename Table::codec_type;
  using key_type = typename Table::key_type;

  basic_solver(GameGraph graph, codec_type codec, SolveBudget budget)
      : graph_(std::move(graph)), codec_(std::move(codec)), table_(codec_), budget_(budget) {}

  memo::Entry entry(const GameState& s) {
    check_state(graph_, s);
    work_ = s.weights;
    return solve_key(codec_.encode(s), s.token);
  }

  Analysis analyze(const GameState& s) {
    Analysis a;
    const memo::Entry root = entry(s);
    a.grundy = memo::entry_grundy(root);
    a.winner = memo::entry_wins(root) ? Winner::Mover : Winner::Opponent;
    const key_type key = codec_.encode(s);
    for (const Incidence& inc : graph_.incident(s.token)) {
      const Weight w = s.weights[inc.edge];
      for (Weight k = 0; k < w; ++k) {
        const memo::Entry child = table_.find(codec_.child(key, inc.edge, w, k, s.token, inc.to));
        if (memo::entry_grundy(child) == 0) a.optimal_moves.push_back({inc.to, k});
      }
    }
    a.states_visited = table_.size();
    return a;
  }

  std::size_t states_visited() const { return table_.size(); }
  const GameGraph& graph() const { return graph_; }

  AuditReport audit() const {
    AuditReport r;
    table_.for_each([&](const key_type& key, memo::Entry e) {
      ++r.entries_checked;
      const GameState s = codec_.decode(key);
      detail::MexSet seen(move_count(graph_, s));
      bool some_child_lost = false;
      for (const Incidence& inc : graph_.incident(s.token)) {
        const Weight w = s.weights[inc.edge];
        for (Weight k = 0; k < w; ++k) {
          const memo::Entry c = table_.find(codec_.child(key, inc.edge, w, k, s.token, inc.to));
          if (c == 0) {
            ++r.missing_children;
            continue;
          }
          seen.mark(memo::entry_grundy(c));
          some_child_lost |= !memo::entry_wins(c);
        }
      }
      const bool wins = memo::entry_wins(e);
      const std::uint32_t g = memo::entry_grundy(e);
      if (wins != (g > 0) || wins != some_child_lost) ++r.coherence_violations;
      if (g != seen.mex()) ++r.mex_violations;
    });
    return r;
  }

 private:
  memo::Entry solve_key(const key_type& key, Vertex token) {
    if (const memo::Entry cached = table_.find(key)) return cached;

    std::size_t moves = 0;
    for (const Incidence& inc : graph_.incident(token)) moves += work_[inc.edge];
    detail::MexSet seen(moves);
    bool some_child_lost = false;

    for (const Incidence& inc : graph_.incident(token)) {
      const Weight w = work_[inc.edge];
      for (Weight k = 0; k < w; ++k) {
        work_[inc.edge] = k;
        const memo::Entry c = solve_key(codec_.child(key, inc.edge, w, k, token, inc.to), inc.to);
        seen.mark(memo::entry_grundy(c));
        some_child_lost |= !memo::entry_wins(c);
      }
      work_[inc.edge] = w;
    }

    const std::uint32_t g = seen.mex();
    if (g > memo::max_grundy) throw std::overflow_error("grundy value exceeds memo entry range");
    if (table_.size() >= budget_.max_states) throw budget_exceeded(table_.size());
    const memo::Entry e = memo::make_entry(g, some_child_lost);
    table_.insert(key, e);
    return e;
  }

  GameGraph graph_;
  codec_type codec_;
  Table table_;
  SolveBudget budget_;
  std::vector<Weight> work_;
};

// Picks the memo representation from the graph's key space. One Solver per
// graph; its memo is shared across every position queried on it.
class Solver {
 public:
  explicit Solver(const GameGraph& graph, SolveBudget budget = {}) : impl_(make(graph, budget)) {}

  Analysis analyze(const GameState& s) {
    return std::visit([&](auto& impl) { return impl.analyze(s); }, impl_);
  }

  std::uint32_t grundy(const GameState& s) {
    return memo::entry_grundy(std::visit([&](auto& impl) { return impl.entry(s); }, impl_));
  }

  Winner winner(const GameState& s) {
    const auto e = std::visit([&](auto& impl) { return impl.entry(s); }, impl_);
    return memo::entry_wins(e) ? Winner::Mover : Winner::Opponent;
  }

  // Winning side plays its first optimal move, losing side its first legal
  // move, until a terminal position.
  std::vector<Move> best_line(GameState s) {
    std::vector<Move> line;
    const GameGraph& g = graph();
    while (!is_terminal(g, s)) {
      const Analysis a = analyze(s);
      const Move m = a.optimal_moves.empty() ? legal_moves(g, s).front() : a.optimal_moves.front();
      line.push_back(m);
      s = apply_move(g, s, m);
    }
    return line;
  }

  std::size_t states_visited() const {
    return std::visit([](const auto& impl) { return impl.states_visited(); }, impl_);
  }

  AuditReport audit() const {
    return std::visit([](const auto& impl) { return impl.audit(); }, impl_);
  }

  const GameGraph& graph() const {
    return std::visit([](const auto& impl) -> const GameGraph& { return impl.graph(); }, impl_);
  }

  std::string_view table_kind() const {
    static constexpr std::string_view names[] = {"dense", "hash", "wide"};
    return names[impl_.index()];
  }

 private:
  using Impl = std::variant<basic_solver<memo::DenseTable>, basic_solver<memo::HashTable>,
                            basic_solver<memo::WideTable>>;

  static Impl make(const GameGraph& g, SolveBudget budget) {
    if (auto packed = memo::PackedCodec::try_make(g)) {
      if (packed->key_space() <= memo::dense_limit) {
        return basic_solver<memo::DenseTable>(g, std::move(*packed), budget);
      }
      return basic_solver<memo::HashTable>(g, std::move(*packed), budget);
    }
    return basic_solver<memo::WideTable>(g, memo::WideCodec(g), budget);
  }

  Impl impl_;
};

inline Analysis solve(const GameGraph& g, const GameState& s, SolveBudget budget = {}) {
  return Solver(g, budget).analyze(s);
}

inline std::vector<Move> best_line(const GameGraph& g, const GameState& s, SolveBudget budget = {}) {
  return Solver(g, budget).best_line(s);
}

}  // namespace nimgraph
