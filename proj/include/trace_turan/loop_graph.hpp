#pragma once

#include <span>
#include <vector>

#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

/// Graph on an arbitrary finite vertex set, with simple edges and loops.
/// Loops carry a multiplicity, and each loop adds one to the degree.
class LoopGraph {
 public:
  LoopGraph() = default;
  /// Duplicate ids are removed.
  explicit LoopGraph(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t order() const { return vertices_.size(); }
  bool has_vertex(Vertex v) const;

  /// Parallel edges collapse. Throws std::invalid_argument for u == v or an
  /// unknown endpoint.
  void add_edge(Vertex u, Vertex v);
  void add_loop(Vertex v, int multiplicity = 1);

  bool has_edge(Vertex u, Vertex v) const;
  /// Sorted simple neighbours of v.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int loops(Vertex v) const;
  int degree(Vertex v) const;
  int min_degree() const;
  std::size_t simple_edge_count() const;

 private:
  std::size_t slot(Vertex v) const;

  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> loops_;
};

/// The link graph L_x(H, S, y): vertex set S, a simple edge uv for every
/// hyperedge {x, u, v} with u, v in S, and a loop at u for every hyperedge
/// {x, u, w} with w outside S and w != y.
///
/// Throws std::invalid_argument if x == y, S meets {x, y}, or any vertex is
/// out of range.
LoopGraph link_graph(const Hypergraph3& h, Vertex x, std::span<const Vertex> s, Vertex y);

struct DegreeInequalityReport {
  bool holds = true;
  /// First u in S with d_L(u) < d_H(x, u) - 1, when `holds` is false.
  Vertex violating_vertex = -1;
  int link_degree = 0;
  int codegree = 0;
};

/// Checks d_{L_x}(u) >= d_H(x, u) - 1 for every u in S.
DegreeInequalityReport verify_degree_inequality(const Hypergraph3& h, Vertex x,
                                                std::span<const Vertex> s, Vertex y);

}  // namespace trace_turan
