#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

/// Simple undirected graph on 0..n-1.
class Graph {
 public:
  explicit Graph(int n = 0);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  /// Edges as (smaller, larger), sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  /// False if already present. Throws std::invalid_argument for loops or
  /// out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

bool is_prime(int q);

/// Polarity graph of PG(2, q) for prime q: vertices are projective points
/// (normalised so the first nonzero coordinate is 1), u ~ v iff u.v = 0 and
/// u != v. q^2+q+1 vertices and q(q+1)^2/2 edges; C4-free.
/// Throws std::invalid_argument if q is not prime.
Graph polarity_graph(int q);

/// Projective point coordinates behind vertex ids of polarity_graph(q).
std::vector<std::array<int, 3>> projective_points(int q);

/// Adds one vertex z = n and the hyperedge {u, v, z} for each edge uv.
/// A C4-free input yields a hypergraph with no C4 trace.
Hypergraph3 lift_to_trace_free(const Graph& g);

struct GreedyConfig {
  int restarts = 32;
};

/// Best of `restarts` random-order greedy packings: triples are offered in a
/// seeded random order and kept iff no K_{2,t} trace appears. The result is
/// maximal trace-free.
Hypergraph3 greedy_lower_bound(int n, int t, std::uint64_t seed, GreedyConfig config = {});

/// Single greedy pass for one seed.
Hypergraph3 greedy_trace_free(int n, int t, std::uint64_t seed);

}  // namespace trace_turan
