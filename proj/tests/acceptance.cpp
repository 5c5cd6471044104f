// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
//
//   acceptance               every criterion
//   acceptance 3 7           only the listed ones (1 and 10 run the suites they need)

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nimgraph/generate.hpp"
#include "nimgraph/solver.hpp"
#include "nimgraph/verify.hpp"

using namespace nimgraph;
using verify::VerificationReport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::duration d) { return std::chrono::duration<double>(d).count(); }

// Suites run once and are shared between criteria.
class Suites {
 public:
  const VerificationReport& get(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) it = cache_.emplace(name, verify::run_suite(name)).first;
    return it->second;
  }

 private:
  std::map<std::string, VerificationReport> cache_;
};

struct Verdict {
  bool pass;
  std::string detail;
};

std::string summary(const VerificationReport& r) {
  std::ostringstream out;
  out << r.suite << ": " << r.instances_checked << " instances, " << r.failures.size() << " failures, "
      << std::fixed;
  out.precision(2);
  out << seconds(r.elapsed) << " s";
  return out.str();
}

std::string first_failure(const VerificationReport& r) {
  if (r.failures.empty()) return "";
  const auto& f = r.failures.front();
  return "; first: " + f.instance + " expected " + f.expected + ", observed " + f.observed;
}

Verdict suites_within(Suites& s, const std::vector<std::string>& names, double limit_s) {
  bool pass = true;
  double total = 0;
  std::string detail;
  for (const auto& n : names) {
    const auto& r = s.get(n);
    pass = pass && r.pass();
    total += seconds(r.elapsed);
    detail += (detail.empty() ? "" : " | ") + summary(r) + first_failure(r);
  }
  if (total > limit_s) {
    pass = false;
    detail += " | over time limit of " + std::to_string(static_cast<int>(limit_s)) + " s";
  }
  return {pass, detail};
}

Verdict coherence(Suites& s) {
  AuditReport total;
  for (const auto& name : verify::suite_names()) total += s.get(name).audit;
  std::ostringstream out;
  out << total.entries_checked << " memo entries across " << verify::suite_names().size() << " suites, "
      << total.coherence_violations << " coherence / " << total.mex_violations << " mex violations, "
      << total.missing_children << " missing children";
  return {total.ok() && total.entries_checked > 0, out.str()};
}

Verdict even_cycles(Suites& s) {
  Verdict v = suites_within(s, {"even-cycles", "uniqueness"}, 600);
  for (const auto& note : s.get("uniqueness").notes) v.detail += " | " + note;
  return v;
}

Verdict goldens(Suites& s) { return suites_within(s, {"goldens"}, 60); }

// SSB_j and K_n from every start, plus the desk-scale K_7 solve.
Verdict ssb_complete(Suites& s) {
  Verdict v = suites_within(s, {"ssb", "complete"}, 900);
  const GameGraph k7 = complete(7);
  Solver solver(k7, SolveBudget{});
  const auto t0 = Clock::now();
  const Winner w = solver.winner(fresh_state(k7));
  std::ostringstream out;
  out << " | K7: " << solver.states_visited() << " states (budget 2^25), " << std::fixed;
  out.precision(2);
  out << seconds(Clock::now() - t0) << " s";
  v.detail += out.str();
  v.pass = v.pass && w == Winner::Mover;
  const auto& ssb = s.get("ssb");
  std::size_t leaf = 0;
  for (const auto& f : ssb.failures) leaf += f.expected == "MoverWins";
  if (leaf) v.detail += " | " + std::to_string(leaf) + " SSB starts off the hubs are mover losses";
  return v;
}

// Each suite is run again (different thread count) and its CSV compared.
Verdict determinism(Suites& s) {
  std::size_t identical = 0;
  std::string differing;
  verify::SuiteOptions again;
  again.threads = 3;
  for (const auto& name : verify::suite_names()) {
    const std::string first = verify::to_csv(s.get(name));
    const std::string second = verify::to_csv(verify::run_suite(name, again));
    if (first == second && !first.empty()) {
      ++identical;
    } else {
      differing += " " + name;
    }
  }
  return {differing.empty(), std::to_string(identical) + "/" + std::to_string(verify::suite_names().size()) +
                                 " suites byte-identical on rerun" + (differing.empty() ? "" : "; differ:" + differing)};
}

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict(Suites&)> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "oracle coherence on every memoized state", coherence},
      {2, "unit paths 1..12, parity rule and path strategy",
       [](Suites& s) { return suites_within(s, {"paths"}, 1); }},
      {3, "odd cycles C3..C11, mover wins, strategy survives every line",
       [](Suites& s) { return suites_within(s, {"odd-cycles"}, 120); }},
      {4, "even cycles: prediction, exhaustive playouts, uniqueness audit", even_cycles},
      {5, "worked examples: C4 pair and C6 prescribed move", goldens},
      {6, "unit K2,j hub starts lose for the mover; defender rule holds",
       [](Suites& s) { return suites_within(s, {"k2j"}, 60); }},
      {7, "unit SSB_j and K_n from every start; SSB strategy, parity, confinement, K7 budget", ssb_complete},
      {8, "planted mutually adjacent pairs: mover wins with the SSB strategy",
       [](Suites& s) { return suites_within(s, {"mutual"}, 600); }},
      {9, "weighted K4 exhaustive and K5 sampled: mover wins",
       [](Suites& s) { return suites_within(s, {"complete-weighted"}, 1200); }},
      {10, "repeated suite runs give byte-identical CSV", determinism},
  };

  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  Suites suites;
  bool all = true;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Verdict v;
    try {
      v = c.check(suites);
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << " - " << c.title << " (" << v.detail << ")"
              << std::endl;
  }
  return all ? 0 : 1;
}
