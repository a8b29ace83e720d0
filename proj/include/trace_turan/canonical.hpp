#pragma once

#include <span>
#include <string>
#include <vector>

#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

struct CanonicalLabeling {
  /// Isomorphism-invariant byte string.
  std::string form;
  /// relabel[v] is the canonical label of vertex v.
  std::vector<Vertex> relabel;
};

/// Canonical labeling by individualization and refinement: cells are refined
/// by each vertex's profile of (cell, cell) pairs over its edges, the first
/// non-singleton cell is branched on (one vertex per class of twins), and
/// the lexicographically least relabeled edge list over all leaves wins.
///
/// `colors`, if non-empty, gives one integer per vertex; isomorphisms must
/// preserve it and smaller colors come first.
CanonicalLabeling canonical_labeling(const Hypergraph3& h, std::span<const int> colors = {});

/// Equal for two hypergraphs iff they are isomorphic.
std::string canonical_form(const Hypergraph3& h);

/// Byte encoding of h after relabeling v -> relabel[v]: n, m, then the
/// relabeled edges in sorted order.
std::string encode_relabeled(const Hypergraph3& h, std::span<const Vertex> relabel);

/// True iff some automorphism of h maps edge a onto edge b.
bool same_edge_orbit(const Hypergraph3& h, const Triple& a, const Triple& b);

}  // namespace trace_turan
