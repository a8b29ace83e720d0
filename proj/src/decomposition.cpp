#include "trace_turan/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace trace_turan {

namespace {

template <typename Codegree>
int min_pair_codegree(const Triple& e, Codegree&& cod) {
  return std::min({cod(e[0], e[1]), cod(e[0], e[2]), cod(e[1], e[2])});
}

bool sorted_contains(const std::vector<Vertex>& list, Vertex v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace

std::vector<Triple> small_codegree_edges(const Hypergraph3& h) {
  std::vector<Triple> out;
  auto cod = [&](Vertex a, Vertex b) { return h.codegree_unchecked(a, b); };
  for (const Triple& e : h.edges()) {
    if (cod(e[0], e[1]) == 1 || cod(e[0], e[2]) == 1 || cod(e[1], e[2]) == 1) out.push_back(e);
  }
  return out;
}

std::vector<Triple> high_codegree_edges(const Hypergraph3& h, double delta) {
  std::vector<Triple> out;
  auto cod = [&](Vertex a, Vertex b) { return h.codegree_unchecked(a, b); };
  for (const Triple& e : h.edges()) {
    if (min_pair_codegree(e, cod) > delta) out.push_back(e);
  }
  return out;
}

EdgePartition partition_edges(const Hypergraph3& h, int delta, CodegreeBasis basis) {
  if (delta < 2) throw std::invalid_argument("partition_edges: delta must be >= 2");
  EdgePartition part;
  part.delta = delta;

  auto full = [&](Vertex a, Vertex b) { return h.codegree_unchecked(a, b); };
  std::vector<Triple> rest;
  for (const Triple& e : h.edges()) {
    (min_pair_codegree(e, full) == 1 ? part.a : rest).push_back(e);
  }

  if (basis == CodegreeBasis::kFull) {
    for (const Triple& e : rest) {
      (min_pair_codegree(e, full) <= delta ? part.b : part.c).push_back(e);
    }
    return part;
  }

  Hypergraph3 without_a(h.order(), rest);
  auto reduced = [&](Vertex a, Vertex b) { return without_a.codegree_unchecked(a, b); };
  for (const Triple& e : rest) {
    (min_pair_codegree(e, reduced) <= delta ? part.b : part.c).push_back(e);
  }
  return part;
}

Neighborhoods neighborhoods(const Hypergraph3& h, Vertex v, std::span<const Triple> restrict) {
  if (v < 0 || v >= h.order()) throw std::invalid_argument("neighborhoods: vertex out of range");
  std::vector<char> in_first(static_cast<std::size_t>(h.order()), 0);
  for (const Triple& e : restrict) {
    if (!triple_contains(e, v)) continue;
    for (Vertex w : e) {
      if (w != v) in_first[w] = 1;
    }
  }
  std::vector<char> in_second(in_first.size(), 0);
  for (const Triple& e : restrict) {
    if (!(in_first[e[0]] || in_first[e[1]] || in_first[e[2]])) continue;
    for (Vertex w : e) {
      if (w != v && !in_first[w]) in_second[w] = 1;
    }
  }
  Neighborhoods nb;
  for (Vertex w = 0; w < h.order(); ++w) {
    if (in_first[w]) nb.first.push_back(w);
    if (in_second[w]) nb.second.push_back(w);
  }
  return nb;
}

EuVu eu_vu(const Neighborhoods& nb, Vertex u, std::span<const Triple> restrict) {
  if (!sorted_contains(nb.first, u)) throw std::invalid_argument("eu_vu: u is not in N1(v)");
  EuVu out;
  for (const Triple& e : restrict) {
    if (!triple_contains(e, u)) continue;
    int hits = 0;
    for (Vertex w : e) hits += sorted_contains(nb.first, w) ? 1 : 0;
    if (hits != 1) continue;
    out.edges.push_back(e);
    for (Vertex w : e) {
      if (sorted_contains(nb.second, w)) out.vertices.push_back(w);
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

EuVu eu_vu(const Hypergraph3& h, Vertex v, Vertex u, std::span<const Triple> restrict) {
  return eu_vu(neighborhoods(h, v, restrict), u, restrict);
}

}  // namespace trace_turan
