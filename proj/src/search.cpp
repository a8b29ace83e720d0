#include "trace_turan/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "trace_turan/canonical.hpp"
#include "trace_turan/constructions.hpp"
#include "trace_turan/trace.hpp"

namespace trace_turan {

namespace {

/// Best value seen so far and its non-isomorphic witnesses, keyed by form.
class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  int best() const { return best_; }

  void offer(const Hypergraph3& h) {
    const int m = static_cast<int>(h.size());
    if (m < best_) return;
    if (m > best_) {
      best_ = m;
      witnesses_.clear();
    }
    if (witnesses_.size() >= cap_) return;
    witnesses_.try_emplace(canonical_form(h), h);
  }

  void merge(const Collector& other) {
    if (other.best_ > best_) {
      best_ = other.best_;
      witnesses_.clear();
    }
    if (other.best_ < best_) return;
    for (const auto& [form, h] : other.witnesses_) witnesses_.try_emplace(form, h);
  }

  std::vector<Hypergraph3> take(std::size_t cap) const {
    std::vector<Hypergraph3> out;
    for (const auto& [form, h] : witnesses_) {
      if (out.size() >= cap) break;
      out.push_back(h);
    }
    return out;
  }

 private:
  std::size_t cap_;
  int best_ = -1;
  std::map<std::string, Hypergraph3> witnesses_;
};

void validate_parameters(int n, int t) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (t < 2) throw std::invalid_argument("t must be >= 2");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Canonical augmentation

struct Node {
  Hypergraph3 h;
  std::vector<Triple> addable;  ///< triples whose addition keeps h trace-free
};

class Augmenter {
 public:
  Augmenter(int t, int lower_bound) : pattern_(t), lower_bound_(lower_bound) {}

  /// Canonically accepted, pairwise non-isomorphic children of `node` that
  /// can still reach `bound` edges.
  std::vector<Node> children(const Node& node, int bound) const {
    std::vector<Node> out;
    std::set<std::string> seen;
    Hypergraph3 g = node.h;
    for (const Triple& e : node.addable) {
      g.add_edge(e);
      if (has_max_profile(g, e)) {
        CanonicalLabeling lab = canonical_labeling(g);
        if (seen.count(lab.form) == 0 && is_canonical_extension(g, lab, e)) {
          seen.insert(lab.form);
          std::vector<Triple> next;
          for (const Triple& f : node.addable) {
            if (f == e) continue;
            g.add_edge(f);
            if (!trace_using_edge(g, f, pattern_)) next.push_back(f);
            g.remove_edge(f);
          }
          if (static_cast<int>(g.size() + next.size()) >= bound) out.push_back({g, std::move(next)});
        }
      }
      g.remove_edge(e);
    }
    return out;
  }

  void dfs(const Node& node, Collector& col, std::uint64_t& nodes) const {
    ++nodes;
    col.offer(node.h);
    const int bound = std::max(lower_bound_, col.best());
    if (static_cast<int>(node.h.size() + node.addable.size()) < bound) return;
    for (const Node& child : children(node, bound)) dfs(child, col, nodes);
  }

  int lower_bound() const { return lower_bound_; }

 private:
  /// Isomorphism invariant of an edge: sorted degrees, then sorted co-degrees.
  static std::array<int, 6> profile(const Hypergraph3& g, const Triple& e) {
    std::array<int, 3> deg{g.degree(e[0]), g.degree(e[1]), g.degree(e[2])};
    std::array<int, 3> cod{g.codegree_unchecked(e[0], e[1]), g.codegree_unchecked(e[0], e[2]),
                           g.codegree_unchecked(e[1], e[2])};
    std::sort(deg.begin(), deg.end());
    std::sort(cod.begin(), cod.end());
    return {deg[0], deg[1], deg[2], cod[0], cod[1], cod[2]};
  }

  static bool has_max_profile(const Hypergraph3& g, const Triple& added) {
    const auto mine = profile(g, added);
    for (const Triple& f : g.edges()) {
      if (mine < profile(g, f)) return false;
    }
    return true;
  }

  /// The deletion edge of g is the one with the largest (profile, relabeled
  /// triple); it must be in the same orbit as the edge just added.
  static bool is_canonical_extension(const Hypergraph3& g, const CanonicalLabeling& lab,
                                     const Triple& added) {
    const Triple* last = nullptr;
    std::pair<std::array<int, 6>, Triple> last_key{};
    for (const Triple& f : g.edges()) {
      std::pair key{profile(g, f), make_triple(lab.relabel[f[0]], lab.relabel[f[1]], lab.relabel[f[2]])};
      if (!last || last_key < key) {
        last = &f;
        last_key = key;
      }
    }
    return same_edge_orbit(g, added, *last);
  }

  TracePattern pattern_;
  int lower_bound_;
};

}  // namespace

SearchResult turan_oracle(int n, int t) {
  validate_parameters(n, t);
  if (n > kOracleMaxN) {
    throw SearchRefused("turan_oracle: n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kOracleMaxN));
  }
  const auto start = std::chrono::steady_clock::now();
  const TracePattern pattern(t);
  const std::vector<Triple> triples = all_triples_colex(n);
  const std::size_t total = triples.size();
  Collector col(100);
  std::uint64_t nodes = 0;
  Hypergraph3 h(n);

  auto rec = [&](auto&& self, std::size_t i) -> void {
    ++nodes;
    if (static_cast<int>(h.size() + (total - i)) < col.best()) return;
    if (i == total) {
      col.offer(h);
      return;
    }
    h.add_edge(triples[i]);
    if (!contains_trace(h, pattern)) self(self, i + 1);
    h.remove_edge(triples[i]);
    self(self, i + 1);
  };
  rec(rec, 0);

  SearchResult r;
  r.n = n;
  r.t = t;
  r.value = col.best();
  r.witnesses = col.take(100);
  r.nodes_explored = nodes;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

SearchResult turan_search(int n, int t, SearchConfig config) {
  validate_parameters(n, t);
  if (n > config.max_n) {
    throw SearchRefused("turan_search: n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(config.max_n));
  }
  const auto start = std::chrono::steady_clock::now();
  int lower = 0;
  if (config.greedy_lower_bound && n >= 3) {
    lower = static_cast<int>(greedy_lower_bound(n, t, config.seed, GreedyConfig{8}).size());
  }
  const Augmenter aug(t, lower);

  // Expand the first two levels here; their nodes become independent tasks.
  Collector top(config.witness_cap);
  std::uint64_t nodes = 0;
  std::vector<Node> level{Node{Hypergraph3(n), all_triples_colex(n)}};
  for (int depth = 0; depth < 2; ++depth) {
    std::vector<Node> next;
    for (const Node& node : level) {
      ++nodes;
      top.offer(node.h);
      const int bound = std::max(lower, top.best());
      if (static_cast<int>(node.h.size() + node.addable.size()) < bound) continue;
      for (Node& child : aug.children(node, bound)) next.push_back(std::move(child));
    }
    level = std::move(next);
  }

  std::vector<Collector> results(level.size(), Collector(config.witness_cap));
  std::vector<std::uint64_t> counts(level.size(), 0);
  int threads = config.threads;
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min<int>(threads, static_cast<int>(level.size())));
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    for (std::size_t i = next_task.fetch_add(1); i < level.size(); i = next_task.fetch_add(1)) {
      aug.dfs(level[i], results[i], counts[i]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < level.size(); ++i) {
    top.merge(results[i]);
    nodes += counts[i];
  }

  SearchResult r;
  r.n = n;
  r.t = t;
  r.value = top.best();
  r.witnesses = top.take(config.witness_cap);
  r.nodes_explored = nodes;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

std::string result_csv_header() { return "n,t,value,witness_count,nodes,seconds"; }

std::string result_csv_row(const SearchResult& r) {
  std::ostringstream os;
  os << r.n << ',' << r.t << ',' << r.value << ',' << r.witnesses.size() << ',' << r.nodes_explored
     << ',' << std::fixed << std::setprecision(3) << r.elapsed_seconds;
  return os.str();
}

}  // namespace trace_turan
