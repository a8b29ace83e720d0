#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trace_turan {

using Vertex = int;

/// A 3-element edge, always stored with strictly increasing vertices.
using Triple = std::array<Vertex, 3>;

/// Thrown when an operation is called outside its documented domain in a way
/// the caller could have checked (as opposed to a malformed argument).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sorts the three vertices. Throws std::invalid_argument on repeats.
Triple make_triple(Vertex a, Vertex b, Vertex c);

bool triple_contains(const Triple& e, Vertex v);

/// Vertex of `e` other than `a` and `b`. Both must lie in `e`.
Vertex third_vertex(const Triple& e, Vertex a, Vertex b);

/// Colex order on sorted triples: compare the largest element first.
bool colex_less(const Triple& a, const Triple& b);

/// 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept as a sorted vector of sorted triples. The pair co-degree
/// table is updated on every insert/remove, so `codegree` is O(1).
class Hypergraph3 {
 public:
  explicit Hypergraph3(int n = 0);

  /// Throws std::invalid_argument on out-of-range vertices or duplicate edges.
  Hypergraph3(int n, std::span<const Triple> edges);
  Hypergraph3(int n, std::initializer_list<Triple> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Triple>& edges() const { return edges_; }

  bool contains(const Triple& e) const;

  /// Returns false (and leaves H unchanged) if the edge is already present.
  bool add_edge(const Triple& e);
  bool remove_edge(const Triple& e);

  /// Number of edges containing both x and y. Throws std::invalid_argument
  /// if x == y or either is out of range.
  int codegree(Vertex x, Vertex y) const;
  int codegree_unchecked(Vertex x, Vertex y) const { return codeg_[index(x, y)]; }

  int degree(Vertex v) const;
  std::vector<Triple> edges_containing(Vertex v) const;

  /// Largest co-degree over all pairs (0 for an empty hypergraph).
  int max_codegree() const;

  friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex x, Vertex y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
  }
  void check_vertex(Vertex v) const;
  void check_triple(const Triple& e) const;
  void bump(const Triple& e, int delta);

  int n_;
  std::vector<Triple> edges_;
  std::vector<int> codeg_;
};

/// Co-degree of the pair {x, y} restricted to an arbitrary edge list.
int codegree_in(std::span<const Triple> edges, Vertex x, Vertex y);

/// Largest pair co-degree inside an edge list.
int max_codegree_in(std::span<const Triple> edges);

std::string to_string(const Triple& e);

/// All C(n,3) triples in colex order ({0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}, ...).
std::vector<Triple> all_triples_colex(int n);

}  // namespace trace_turan
