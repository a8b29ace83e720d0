// Acceptance suite: prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "trace_turan/bounds.hpp"
#include "trace_turan/canonical.hpp"
#include "trace_turan/cnf.hpp"
#include "trace_turan/constructions.hpp"
#include "trace_turan/dominated_sets.hpp"
#include "trace_turan/lemma_checks.hpp"
#include "trace_turan/search.hpp"
#include "trace_turan/trace.hpp"

using namespace trace_turan;

namespace {

// ex(n, Tr_3(K_{2,t})), n = 0..7.
const std::map<int, std::vector<int>> kRegression = {
    {2, {0, 0, 0, 1, 4, 6, 7, 9}},
    {3, {0, 0, 0, 1, 4, 10, 14, 15}},
};
constexpr int kRegressionMaxN = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

// Searches reused by criteria 1, 3 and 7.
std::map<std::pair<int, int>, SearchResult>& search_cache() {
  static std::map<std::pair<int, int>, SearchResult> cache;
  return cache;
}

const SearchResult& cached_search(int n, int t) {
  auto& cache = search_cache();
  auto it = cache.find({n, t});
  if (it == cache.end()) it = cache.emplace(std::pair{n, t}, turan_search(n, t)).first;
  return it->second;
}

Outcome criterion_oracle() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  int compared = 0;
  std::string mismatches;
  for (int t : {2, 3}) {
    for (int n = 0; n <= kOracleMaxN; ++n) {
      const SearchResult o = turan_oracle(n, t);
      const SearchResult& s = cached_search(n, t);
      bool same = o.value == s.value && o.witnesses.size() == s.witnesses.size();
      for (std::size_t i = 0; same && i < o.witnesses.size(); ++i) {
        same = canonical_form(o.witnesses[i]) == canonical_form(s.witnesses[i]);
      }
      if (!same) mismatches += " (n=" + std::to_string(n) + ",t=" + std::to_string(t) + ")";
      ++compared;
    }
  }
  const double elapsed = seconds_since(start);
  const int ex42 = cached_search(4, 2).value;
  const int ex53 = cached_search(5, 3).value;
  out.pass = mismatches.empty() && elapsed < 600.0 && ex42 == 4 && ex53 == 10;
  out.detail = std::to_string(compared) + " (n,t) cases, search = oracle in value and witness classes" +
               (mismatches.empty() ? "" : ", mismatches:" + mismatches) + "; ex(4,C4)=" + std::to_string(ex42) +
               ", ex(5,K23)=" + std::to_string(ex53) + "; " + fixed(elapsed, 2) + " s";
  return out;
}

Outcome criterion_detector() {
  Outcome out;
  std::mt19937_64 rng(0xacce);
  int random_cases = 0;
  int disagreements = 0;
  int with_trace = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int t = 2 + static_cast<int>(rng() % 2);
    const double p = std::uniform_real_distribution<double>(0.02, 0.45)(rng);
    const Hypergraph3 h = oracles::random_hypergraph(n, p, rng);
    const auto fast = contains_trace(h, TracePattern(t));
    const auto slow = contains_trace_naive(h, TracePattern(t));
    if (fast.has_value() != slow.has_value()) ++disagreements;
    if (fast && !verify_certificate(h, *fast, TracePattern(t))) ++disagreements;
    with_trace += fast.has_value();
    ++random_cases;
  }
  int exhaustive = 0;
  for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
    const Hypergraph3 h = oracles::hypergraph_from_mask(5, mask);
    for (int t : {2, 3}) {
      if (contains_trace(h, TracePattern(t)).has_value() != contains_trace_naive(h, TracePattern(t)).has_value()) {
        ++disagreements;
      }
      ++exhaustive;
    }
  }
  out.pass = disagreements == 0;
  out.detail = std::to_string(random_cases) + " random (" + std::to_string(with_trace) + " with a trace) + " +
               std::to_string(exhaustive) + " exhaustive 5-vertex (hypergraph,t) cases; " +
               std::to_string(disagreements) + " disagreements";
  return out;
}

Hypergraph3 complete(int n) {
  Hypergraph3 h(n);
  for (const Triple& e : all_triples_colex(n)) h.add_edge(e);
  return h;
}

Outcome criterion_lemmas() {
  Outcome out;
  int trace_free_inputs = 0;
  int false_alarms = 0;
  for (int t : {2, 3}) {
    for (int n = 3; n <= kRegressionMaxN; ++n) {
      for (const Hypergraph3& h : cached_search(n, t).witnesses) {
        for (int delta : {2, 14}) false_alarms += static_cast<int>(check_lemma_invariants(h, t, delta).size());
        ++trace_free_inputs;
      }
    }
  }
  for (int q : {2, 3, 5, 7}) {
    const Hypergraph3 h = lift_to_trace_free(polarity_graph(q));
    for (int delta : {2, 14}) false_alarms += static_cast<int>(check_lemma_invariants(h, 2, delta).size());
    ++trace_free_inputs;
  }

  struct Violating {
    std::string name;
    Hypergraph3 h;
    int t;
    int delta;
  };
  std::vector<Violating> cases{
      {"pair-codegree", Hypergraph3(7, {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 1, 4}, Triple{0, 2, 5},
                                        Triple{1, 2, 5}, Triple{0, 3, 5}, Triple{1, 3, 5}, Triple{0, 4, 5},
                                        Triple{1, 4, 5}}),
       2, 2},
      {"K8", complete(8), 2, 2},
      {"K9", complete(9), 3, 2},
      {"K17/delta14", complete(17), 2, 14},
  };
  int violations = 0;
  int certified = 0;
  int silent_instances = 0;
  for (const auto& c : cases) {
    const auto vs = check_lemma_invariants(c.h, c.t, c.delta);
    if (vs.empty()) ++silent_instances;
    for (const auto& v : vs) {
      ++violations;
      if (v.certificate && verify_certificate(c.h, *v.certificate, TracePattern(c.t))) ++certified;
    }
  }
  out.pass = false_alarms == 0 && silent_instances == 0 && violations > 0 && certified == violations;
  out.detail = std::to_string(trace_free_inputs) + " trace-free inputs with " + std::to_string(false_alarms) +
               " violations; " + std::to_string(cases.size()) + " violating instances with " +
               std::to_string(violations) + " violations, " + std::to_string(certified) + " with verified certificates";
  return out;
}

Outcome criterion_constructions() {
  Outcome out;
  std::string detail;
  double ratio7 = 0.0;
  for (int q : {2, 3, 5, 7}) {
    const Graph g = polarity_graph(q);
    const bool counts = g.order() == q * q + q + 1 && static_cast<int>(g.size()) == q * (q + 1) * (q + 1) / 2;
    const bool c4_free = oracles::is_c4_free_brute(g);
    const Hypergraph3 h = lift_to_trace_free(g);
    const bool trace_free = detect_trace(h, TracePattern(2)).status == DetectStatus::kAbsent;
    const double ratio = static_cast<double>(h.size()) / std::pow(static_cast<double>(h.order()), 1.5);
    if (q == 7) ratio7 = ratio;
    out.pass = out.pass && counts && c4_free && trace_free;
    detail += "q=" + std::to_string(q) + ": " + std::to_string(g.order()) + "v/" + std::to_string(g.size()) + "e" +
              (counts ? "" : " BAD-COUNT") + (c4_free ? "" : " NOT-C4-FREE") + (trace_free ? "" : " HAS-TRACE") + "; ";
  }
  out.pass = out.pass && ratio7 >= 0.45;
  out.detail = detail + "q=7 lift e/n^1.5 = " + fixed(ratio7, 4);
  return out;
}

Outcome criterion_derivation() {
  Outcome out;
  const auto points = derivation_check(14.0, 1e6, 1000);
  int holds = 0;
  double worst = 0.0;
  for (const auto& p : points) {
    holds += p.holds;
    worst = std::max(worst, p.three_term.hi() / p.main.lo());
  }
  // The same grid rounded to integers, duplicates dropped.
  std::vector<double> integers;
  for (const auto& p : points) {
    const double r = std::round(p.t);
    if (integers.empty() || integers.back() != r) integers.push_back(r);
  }
  int integer_holds = 0;
  for (double t : integers) integer_holds += derivation_at(t).holds;
  const double eps14 = epsilon(14);
  out.pass = holds == static_cast<int>(points.size()) &&
             integer_holds == static_cast<int>(integers.size()) && eps14 <= 0.25;
  out.detail = std::to_string(holds) + "/" + std::to_string(points.size()) +
               " interval points hold on [14, 1e6] (" + std::to_string(integer_holds) + "/" +
               std::to_string(integers.size()) + " after rounding t to integers), worst hi/lo ratio " +
               fixed(worst, 4) + "; eps(14) = " + fixed(eps14, 6);
  return out;
}

LoopGraph loop_graph_from_masks(int n, unsigned edges, unsigned loops) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  LoopGraph g(vs);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (edges >> k & 1U) g.add_edge(i, j);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (loops >> v & 1U) g.add_loop(v);
  }
  return g;
}

Outcome criterion_domination() {
  Outcome out;
  int failures = 0;
  std::mt19937_64 rng(0xd0d0);

  // 1000 random graphs through both constructions.
  for (int i = 0; i < 1000; ++i) {
    const int delta = 2 + static_cast<int>(rng() % 5);
    const int n = delta + 1 + static_cast<int>(rng() % 30);
    LoopGraph g = oracles::random_loop_graph(n, 0.15, 0.1, rng);
    oracles::raise_min_degree(g, delta, rng);
    const DominatedSetResult r = dominated_min_degree(g, delta, rng());
    if (r.members.size() < min_degree_guarantee(g.order(), delta) || !is_dominated(g, r.members) ||
        !witnesses_valid(g, r.members, r.witnesses) || !oracles::dominated_by_definition(g, r.members)) {
      ++failures;
    }
    const int m = 1 + static_cast<int>(rng() % 30);
    const LoopGraph gx = oracles::random_loop_graph(m, 0.2, 0.15, rng);
    const LoopGraph gy = oracles::random_loop_graph(m, 0.2, 0.15, rng);
    const PairDominatedSetResult p = dominated_pair_min1(gx, gy);
    if (3 * p.members.size() < static_cast<std::size_t>(m) || !is_dominated(gx, p.members) ||
        !is_dominated(gy, p.members) || !witnesses_valid(gx, p.members, p.in_x) ||
        !witnesses_valid(gy, p.members, p.in_y)) {
      ++failures;
    }
  }

  // Every loop graph (loops of multiplicity 0/1) on up to 6 vertices, for
  // each delta in {2,3,4} its minimum degree allows.
  long long exhaustive = 0;
  for (int n = 1; n <= 6; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned e = 0; e < (1U << pairs); ++e) {
      for (unsigned l = 0; l < (1U << n); ++l) {
        const LoopGraph g = loop_graph_from_masks(n, e, l);
        for (int delta = 2; delta <= std::min(4, g.min_degree()); ++delta) {
          const DominatedSetResult r = dominated_min_degree(g, delta, e * 131 + l);
          if (r.members.size() < min_degree_guarantee(g.order(), delta) ||
              !witnesses_valid(g, r.members, r.witnesses)) {
            ++failures;
          }
          ++exhaustive;
        }
      }
    }
  }

  // Up to 12 vertices: compare with the true maximum dominated set.
  int brute = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int delta = 2; delta <= std::min(4, n - 1); ++delta) {
      for (int i = 0; i < 20; ++i) {
        LoopGraph g = oracles::random_loop_graph(n, 0.2, 0.05, rng);
        oracles::raise_min_degree(g, delta, rng);
        const std::size_t best = oracles::max_dominated_size(g);
        const DominatedSetResult r = dominated_min_degree(g, delta, rng());
        const DominatedSetResult greedy = dominated_min_degree_greedy(g, delta);
        const std::size_t need = min_degree_guarantee(g.order(), delta);
        if (best < need || r.members.size() < need || r.members.size() > best || greedy.members.size() < need ||
            !oracles::dominated_by_definition(g, r.members) || !oracles::dominated_by_definition(g, greedy.members)) {
          ++failures;
        }
        ++brute;
      }
    }
  }

  // Pairs of graphs on up to 4 vertices, all combinations.
  long long pair_cases = 0;
  for (int n = 1; n <= 4; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    std::vector<LoopGraph> graphs;
    for (unsigned e = 0; e < (1U << pairs); ++e) {
      for (unsigned l = 0; l < (1U << n); ++l) {
        LoopGraph g = loop_graph_from_masks(n, e, l);
        if (g.min_degree() > 0) graphs.push_back(std::move(g));
      }
    }
    for (const LoopGraph& gx : graphs) {
      for (const LoopGraph& gy : graphs) {
        const PairDominatedSetResult p = dominated_pair_min1(gx, gy);
        if (3 * p.members.size() < static_cast<std::size_t>(n) || !witnesses_valid(gx, p.members, p.in_x) ||
            !witnesses_valid(gy, p.members, p.in_y)) {
          ++failures;
        }
        ++pair_cases;
      }
    }
  }

  out.pass = failures == 0;
  out.detail = "1000 random graph rounds, " + std::to_string(exhaustive) + " exhaustive (graph,delta) cases n<=6, " +
               std::to_string(brute) + " brute-force maxima n<=12, " + std::to_string(pair_cases) +
               " exhaustive graph pairs n<=4; " + std::to_string(failures) + " failures";
  return out;
}

bool same_result(const SearchResult& a, const SearchResult& b) {
  if (a.value != b.value || a.nodes_explored != b.nodes_explored || a.witnesses.size() != b.witnesses.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    if (!(a.witnesses[i] == b.witnesses[i])) return false;
  }
  return true;
}

Outcome criterion_regression() {
  Outcome out;
  bool monotone = true;
  bool matches = true;
  bool stable = true;
  for (int t : {2, 3}) {
    for (int n = 0; n <= kRegressionMaxN; ++n) {
      const SearchResult& first = cached_search(n, t);
      matches = matches && first.value == kRegression.at(t)[n];
      if (n > 0) monotone = monotone && cached_search(n - 1, t).value <= first.value;
      if (t == 3) monotone = monotone && cached_search(n, 2).value <= first.value;
      SearchConfig threaded;
      threaded.threads = 4;
      stable = stable && same_result(first, turan_search(n, t, threaded));
      if (n < kRegressionMaxN) stable = stable && same_result(first, turan_search(n, t));
    }
  }
  out.pass = monotone && matches && stable;
  std::string table;
  for (int t : {2, 3}) {
    table += " t=" + std::to_string(t) + ":";
    for (int n = 3; n <= kRegressionMaxN; ++n) table += " " + std::to_string(cached_search(n, t).value);
  }
  out.detail = std::string("n=3..7") + table + "; monotone " + (monotone ? "yes" : "NO") + ", regression " +
               (matches ? "match" : "MISMATCH") + ", repeat and 4-thread runs " +
               (stable ? "identical" : "DIFFER");
  return out;
}

std::string find_external_solver() {
  const char* path = std::getenv("PATH");
  if (!path) return {};
  for (const char* name : {"kissat", "cadical", "minisat", "glucose", "cryptominisat5"}) {
    std::stringstream dirs(path);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      const auto candidate = std::filesystem::path(dir) / name;
      if (std::filesystem::exists(candidate)) return candidate.string();
    }
  }
  return {};
}

// Exit status 10 = SAT, 20 = UNSAT for all the solvers above.
std::optional<bool> run_external(const std::string& solver, const std::string& cnf) {
  const std::string cmd = "'" + solver + "' '" + cnf + "' > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return std::nullopt;
  if (WEXITSTATUS(status) == 10) return true;
  if (WEXITSTATUS(status) == 20) return false;
  return std::nullopt;
}

Outcome criterion_cnf() {
  Outcome out;
  const std::string solver = find_external_solver();
  const auto dir = std::filesystem::temp_directory_path() / "trace_turan_acceptance";
  std::filesystem::create_directories(dir);
  int checks = 0;
  int failures = 0;
  for (int n = 3; n <= 5; ++n) {
    const int value = turan_oracle(n, 2).value;
    for (int m : {value, value + 1}) {
      const bool expect_sat = m == value;
      std::optional<bool> sat;
      if (!solver.empty()) {
        const auto file = dir / ("n" + std::to_string(n) + "_m" + std::to_string(m) + ".cnf");
        export_cnf(n, m, 2, file.string());
        sat = run_external(solver, file.string());
      } else {
        const CnfFormula f = build_turan_cnf(n, m, 2);
        const auto model = oracles::Dpll(f.variables, f.clauses).solve();
        sat = model.has_value();
        if (model) {
          const Hypergraph3 h = decode_model(n, f, *model);
          if (static_cast<int>(h.size()) < m || contains_trace(h, TracePattern(2))) ++failures;
        }
      }
      if (!sat || *sat != expect_sat) ++failures;
      ++checks;
    }
  }
  out.pass = failures == 0;
  out.detail = std::to_string(checks) + " formulas (n=3..5, t=2, m = ex and ex+1) via " +
               (solver.empty() ? std::string("internal DPLL (no external SAT solver on PATH)") : solver) + "; " +
               std::to_string(failures) + " mismatches";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion_oracle},
      {"detector equivalence", criterion_detector},
      {"lemma invariant suite", criterion_lemmas},
      {"construction fidelity", criterion_constructions},
      {"interval derivation", criterion_derivation},
      {"dominated-set guarantees", criterion_domination},
      {"monotonicity and regression", criterion_regression},
      {"CNF cross-check", criterion_cnf},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
