#include "trace_turan/loop_graph.hpp"

#include <algorithm>
#include <limits>

namespace trace_turan {

LoopGraph::LoopGraph(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  adjacency_.resize(vertices_.size());
  loops_.assign(vertices_.size(), 0);
}

bool LoopGraph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t LoopGraph::slot(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

void LoopGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("use add_loop for loops");
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex w) {
    auto it = std::lower_bound(list.begin(), list.end(), w);
    if (it == list.end() || *it != w) list.insert(it, w);
  };
  std::size_t su = slot(u);
  std::size_t sv = slot(v);
  insert_sorted(adjacency_[su], v);
  insert_sorted(adjacency_[sv], u);
}

void LoopGraph::add_loop(Vertex v, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative loop multiplicity");
  loops_[slot(v)] += multiplicity;
}

bool LoopGraph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[slot(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<Vertex>& LoopGraph::neighbors(Vertex v) const { return adjacency_[slot(v)]; }

int LoopGraph::loops(Vertex v) const { return loops_[slot(v)]; }

int LoopGraph::degree(Vertex v) const {
  std::size_t s = slot(v);
  return static_cast<int>(adjacency_[s].size()) + loops_[s];
}

int LoopGraph::min_degree() const {
  if (vertices_.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, static_cast<int>(adjacency_[i].size()) + loops_[i]);
  }
  return best;
}

std::size_t LoopGraph::simple_edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

namespace {

void validate_link_inputs(const Hypergraph3& h, Vertex x, std::span<const Vertex> s, Vertex y) {
  auto in_range = [&](Vertex v) { return v >= 0 && v < h.order(); };
  if (!in_range(x) || !in_range(y)) throw std::invalid_argument("x or y out of range");
  if (x == y) throw std::invalid_argument("x and y must differ");
  for (Vertex u : s) {
    if (!in_range(u)) throw std::invalid_argument("S vertex out of range");
    if (u == x || u == y) throw std::invalid_argument("S must avoid x and y");
  }
}

}  // namespace

LoopGraph link_graph(const Hypergraph3& h, Vertex x, std::span<const Vertex> s, Vertex y) {
  validate_link_inputs(h, x, s, y);
  LoopGraph g(std::vector<Vertex>(s.begin(), s.end()));
  for (const Triple& e : h.edges()) {
    if (!triple_contains(e, x)) continue;
    Vertex a = -1;
    Vertex b = -1;
    for (Vertex v : e) {
      if (v == x) continue;
      (a < 0 ? a : b) = v;
    }
    const bool a_in = g.has_vertex(a);
    const bool b_in = g.has_vertex(b);
    if (a_in && b_in) {
      g.add_edge(a, b);
    } else if (a_in && b != y) {
      g.add_loop(a);
    } else if (b_in && a != y) {
      g.add_loop(b);
    }
  }
  return g;
}

DegreeInequalityReport verify_degree_inequality(const Hypergraph3& h, Vertex x,
                                                std::span<const Vertex> s, Vertex y) {
  LoopGraph g = link_graph(h, x, s, y);
  DegreeInequalityReport report;
  for (Vertex u : g.vertices()) {
    const int link = g.degree(u);
    const int cod = h.codegree(x, u);
    if (link < cod - 1) {
      report.holds = false;
      report.violating_vertex = u;
      report.link_degree = link;
      report.codegree = cod;
      return report;
    }
  }
  return report;
}

}  // namespace trace_turan
