#pragma once

#include <span>
#include <vector>

#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

/// Which hypergraph the B/C co-degree threshold is measured in.
enum class CodegreeBasis {
  kFull,       ///< d_H, as in the definition of the partition
  kWithoutA,   ///< d_{H \ A}, the variant used when choosing pairs inside B
};

/// Split of E(H) into small (A), medium (B) and large (C) co-degree edges.
struct EdgePartition {
  int delta = 2;
  std::vector<Triple> a;
  std::vector<Triple> b;
  std::vector<Triple> c;
};

/// A: some pair has co-degree 1. B: not in A, some pair has co-degree at most
/// delta. C: every pair has co-degree above delta. A is always computed in
/// the full H; `basis` selects where the B/C threshold is measured.
/// Throws std::invalid_argument for delta < 2.
EdgePartition partition_edges(const Hypergraph3& h, int delta,
                              CodegreeBasis basis = CodegreeBasis::kFull);

/// Edges with at least one pair of co-degree exactly 1 in H.
std::vector<Triple> small_codegree_edges(const Hypergraph3& h);

/// Edges of H whose every pair has co-degree > delta in H (H_delta^+).
std::vector<Triple> high_codegree_edges(const Hypergraph3& h, double delta);

struct Neighborhoods {
  std::vector<Vertex> first;   ///< N1
  std::vector<Vertex> second;  ///< N2
};

/// Distance-1 and distance-2 neighbourhoods of v using only `restrict` edges.
Neighborhoods neighborhoods(const Hypergraph3& h, Vertex v, std::span<const Triple> restrict);

struct EuVu {
  std::vector<Triple> edges;     ///< E_u
  std::vector<Vertex> vertices;  ///< V_u
};

/// E_u: edges of `restrict` meeting N1(v) in exactly {u}. V_u: the N2(v)
/// vertices covered by E_u. Throws std::invalid_argument if u is not in N1(v).
EuVu eu_vu(const Hypergraph3& h, Vertex v, Vertex u, std::span<const Triple> restrict);

/// Same as above with N1/N2 already computed for v.
EuVu eu_vu(const Neighborhoods& nb, Vertex u, std::span<const Triple> restrict);

}  // namespace trace_turan
