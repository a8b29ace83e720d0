#include "trace_turan/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "trace_turan/trace.hpp"

namespace trace_turan {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  adjacency_.resize(static_cast<std::size_t>(n));
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  if (u > v) std::swap(u, v);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (pos != edges_.end() && *pos == std::make_pair(u, v)) return false;
  edges_.insert(pos, {u, v});
  auto& au = adjacency_[u];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> projective_points(int q) {
  if (!is_prime(q)) throw std::invalid_argument("projective_points: q = " + std::to_string(q) + " is not prime");
  std::vector<std::array<int, 3>> pts;
  pts.push_back({0, 0, 1});
  for (int c = 0; c < q; ++c) pts.push_back({0, 1, c});
  for (int b = 0; b < q; ++b) {
    for (int c = 0; c < q; ++c) pts.push_back({1, b, c});
  }
  return pts;
}

Graph polarity_graph(int q) {
  if (!is_prime(q)) throw std::invalid_argument("polarity_graph: q = " + std::to_string(q) + " is not prime");
  const auto pts = projective_points(q);
  Graph g(static_cast<int>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      long dot = 0;
      for (int k = 0; k < 3; ++k) dot += static_cast<long>(pts[i][k]) * pts[j][k];
      if (dot % q == 0) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

Hypergraph3 lift_to_trace_free(const Graph& g) {
  const Vertex z = g.order();
  Hypergraph3 h(g.order() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(make_triple(u, v, z));
  return h;
}

Hypergraph3 greedy_trace_free(int n, int t, std::uint64_t seed) {
  const TracePattern pattern(t);
  std::vector<Triple> order = all_triples_colex(n);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  Hypergraph3 h(n);
  for (const Triple& e : order) {
    if (!incremental_trace_check(h, e, pattern)) h.add_edge(e);
  }
  return h;
}

Hypergraph3 greedy_lower_bound(int n, int t, std::uint64_t seed, GreedyConfig config) {
  if (n < 0) throw std::invalid_argument("greedy_lower_bound: negative n");
  Hypergraph3 best(n);
  for (int i = 0; i < std::max(1, config.restarts); ++i) {
    Hypergraph3 h = greedy_trace_free(n, t, seed + static_cast<std::uint64_t>(i));
    if (h.size() > best.size()) best = std::move(h);
  }
  return best;
}

}  // namespace trace_turan
