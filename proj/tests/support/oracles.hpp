#pragma once

// Brute-force reference implementations used only by the tests. Each one is
// written from the definitions, independently of the library algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "trace_turan/constructions.hpp"
#include "trace_turan/hypergraph.hpp"
#include "trace_turan/loop_graph.hpp"

namespace oracles {

using trace_turan::Graph;
using trace_turan::Hypergraph3;
using trace_turan::LoopGraph;
using trace_turan::Triple;
using trace_turan::Vertex;

inline Hypergraph3 random_hypergraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  Hypergraph3 h(n);
  for (const Triple& e : trace_turan::all_triples_colex(n)) {
    if (keep(rng)) h.add_edge(e);
  }
  return h;
}

/// Hypergraph whose edge set is the bit pattern `mask` over colex triples.
inline Hypergraph3 hypergraph_from_mask(int n, std::uint64_t mask) {
  Hypergraph3 h(n);
  const auto triples = trace_turan::all_triples_colex(n);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (mask >> i & 1U) h.add_edge(triples[i]);
  }
  return h;
}

inline std::vector<Triple> relabeled_sorted(const Hypergraph3& h, const std::vector<Vertex>& perm) {
  std::vector<Triple> out;
  for (const Triple& e : h.edges()) out.push_back(trace_turan::make_triple(perm[e[0]], perm[e[1]], perm[e[2]]));
  std::sort(out.begin(), out.end());
  return out;
}

/// Isomorphism test over all n! permutations.
inline bool brute_isomorphic(const Hypergraph3& a, const Hypergraph3& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<Triple>& target = b.edges();
  do {
    if (relabeled_sorted(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Berge K_{2,t}: distinct edges e_{x,u} ⊇ {x,u} and e_{y,u} ⊇ {y,u}. Tries
/// every x, y, D and every injective edge assignment.
inline bool brute_berge(const Hypergraph3& h, int t) {
  const int n = h.order();
  const auto& edges = h.edges();
  std::vector<std::vector<std::vector<int>>> holding(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a != b) holding[edges[i][a]][edges[i][b]].push_back(i);
      }
    }
  }
  std::vector<char> used(edges.size(), 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v) {
        if (v != x && v != y) rest.push_back(v);
      }
      if (static_cast<int>(rest.size()) < t) continue;
      std::vector<char> pick(rest.size(), 0);
      std::fill(pick.begin(), pick.begin() + t, 1);
      do {
        std::vector<std::pair<Vertex, Vertex>> pattern;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (pick[i]) {
            pattern.push_back({x, rest[i]});
            pattern.push_back({y, rest[i]});
          }
        }
        auto assign = [&](auto&& self, std::size_t k) -> bool {
          if (k == pattern.size()) return true;
          for (int e : holding[pattern[k].first][pattern[k].second]) {
            if (used[e]) continue;
            used[e] = 1;
            const bool ok = self(self, k + 1);
            used[e] = 0;
            if (ok) return true;
          }
          return false;
        };
        if (assign(assign, 0)) return true;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return false;
}

/// Dominated-set test from the definition.
inline bool dominated_by_definition(const LoopGraph& g, const std::vector<Vertex>& d) {
  std::set<Vertex> in(d.begin(), d.end());
  for (Vertex v : d) {
    if (g.loops(v) > 0) continue;
    bool found = false;
    for (Vertex u : g.vertices()) {
      if (!in.count(u) && g.has_edge(u, v)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

/// Largest dominated set, by scanning every subset (|V| <= 20).
inline std::size_t max_dominated_size(const LoopGraph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    std::vector<Vertex> d;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) d.push_back(vs[i]);
    }
    if (dominated_by_definition(g, d)) best = size;
  }
  return best;
}

/// Random loop graph on 0..n-1; simple edges with probability p, loops with
/// probability loop_p. Isolated vertices get a random neighbour.
inline LoopGraph random_loop_graph(int n, double p, double loop_p, std::mt19937_64& rng) {
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  LoopGraph g(vs);
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution loop(loop_p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
    if (loop(rng)) g.add_loop(u);
  }
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (Vertex v = 0; v < n; ++v) {
      while (g.degree(v) == 0) {
        const Vertex u = pick(rng);
        if (u != v) g.add_edge(u, v);
      }
    }
  } else if (n == 1) {
    g.add_loop(0);
  }
  return g;
}

/// Raises every degree to at least delta with random edges and loops.
inline void raise_min_degree(LoopGraph& g, int delta, std::mt19937_64& rng) {
  const auto& vs = g.vertices();
  std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
  std::bernoulli_distribution loop(0.2);
  for (Vertex v : vs) {
    while (g.degree(v) < delta) {
      const Vertex u = vs[pick(rng)];
      if (u == v || loop(rng) || g.neighbors(v).size() + 1 >= vs.size()) {
        g.add_loop(v);
      } else {
        g.add_edge(u, v);
      }
    }
  }
}

inline bool is_c4_free_brute(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int common = 0;
      for (int c = 0; c < n; ++c) {
        if (c != a && c != b && g.has_edge(a, c) && g.has_edge(b, c)) ++common;
      }
      if (common >= 2) return false;
    }
  }
  return true;
}

/// Plain DPLL with unit propagation. Returns a model indexed 1..vars, or
/// nothing if unsatisfiable.
class Dpll {
 public:
  Dpll(int vars, std::vector<std::vector<int>> clauses) : vars_(vars), clauses_(std::move(clauses)) {
    watch_.resize(static_cast<std::size_t>(2 * vars_ + 2));
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      for (int lit : clauses_[c]) watch_[slot(lit)].push_back(c);
    }
  }

  std::optional<std::vector<bool>> solve() {
    value_.assign(static_cast<std::size_t>(vars_ + 1), 0);
    for (const auto& c : clauses_) {
      if (c.empty()) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    std::vector<bool> model(static_cast<std::size_t>(vars_ + 1), false);
    for (int v = 1; v <= vars_; ++v) model[v] = value_[v] > 0;
    return model;
  }

 private:
  std::size_t slot(int lit) const { return static_cast<std::size_t>(lit > 0 ? 2 * lit : -2 * lit + 1); }
  int lit_value(int lit) const { return lit > 0 ? value_[lit] : -value_[-lit]; }

  // Propagates from the trail position; false on conflict.
  bool propagate(std::vector<int>& trail, std::size_t from) {
    for (std::size_t i = from; i < trail.size(); ++i) {
      const int falsified = -trail[i];
      for (std::size_t c : watch_[slot(falsified)]) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : clauses_[c]) {
          const int v = lit_value(lit);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          value_[std::abs(last)] = last > 0 ? 1 : -1;
          trail.push_back(last);
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    for (const auto& c : clauses_) {
      if (c.size() == 1 && lit_value(c[0]) == 0) {
        value_[std::abs(c[0])] = c[0] > 0 ? 1 : -1;
        trail.push_back(c[0]);
      } else if (c.size() == 1 && lit_value(c[0]) < 0) {
        return false;
      }
    }
    if (!propagate(trail, 0)) return false;
    return branch();
  }

  bool branch() {
    int var = 0;
    for (int v = 1; v <= vars_; ++v) {
      if (value_[v] == 0) {
        var = v;
        break;
      }
    }
    if (var == 0) return true;
    for (int lit : {var, -var}) {
      std::vector<int> trail{lit};
      value_[var] = lit > 0 ? 1 : -1;
      if (propagate(trail, 0) && branch()) return true;
      for (int l : trail) value_[std::abs(l)] = 0;
    }
    return false;
  }

  int vars_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<int> value_;
};

inline bool satisfies(const std::vector<std::vector<int>>& clauses, const std::vector<bool>& model) {
  for (const auto& c : clauses) {
    bool sat = false;
    for (int lit : c) {
      if ((lit > 0) == model[std::abs(lit)]) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace oracles
