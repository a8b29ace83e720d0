#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "trace_turan/loop_graph.hpp"

namespace trace_turan {

// A set D is dominated in a loop graph when every member has a loop or a
// neighbour outside D. Unlike a dominating set, D certifies itself.

/// Why a member of D is dominated: its own loop, or an outside neighbour.
struct Witness {
  enum class Kind { kLoop, kOutsideNeighbor };
  Kind kind = Kind::kLoop;
  Vertex neighbor = -1;  ///< meaningful for kOutsideNeighbor

  static Witness loop() { return {Kind::kLoop, -1}; }
  static Witness outside(Vertex u) { return {Kind::kOutsideNeighbor, u}; }
  friend bool operator==(const Witness&, const Witness&) = default;
};

using WitnessMap = std::map<Vertex, Witness>;

struct DominatedSetResult {
  std::vector<Vertex> members;  ///< sorted
  WitnessMap witnesses;
};

/// A set dominated in two graphs on the same vertex set at once.
struct PairDominatedSetResult {
  std::vector<Vertex> members;  ///< sorted
  WitnessMap in_x;
  WitnessMap in_y;
};

bool is_dominated(const LoopGraph& g, std::span<const Vertex> d);

/// Checks one witness for v against g and the set d.
bool witness_valid(const LoopGraph& g, std::span<const Vertex> d, Vertex v, const Witness& w);

/// True iff every member has a valid witness in the map.
bool witnesses_valid(const LoopGraph& g, std::span<const Vertex> d, const WitnessMap& witnesses);

/// Builds witnesses for a set already known to be dominated (loop preferred,
/// else the smallest outside neighbour). Throws std::invalid_argument if some
/// member has neither.
WitnessMap make_witnesses(const LoopGraph& g, std::span<const Vertex> d);

struct StarComponent {
  /// A looped singleton has no leaves.
  Vertex center = -1;
  std::vector<Vertex> leaves;  ///< sorted

  bool is_loop_vertex() const { return leaves.empty(); }
};

struct StarDecomposition {
  std::vector<StarComponent> components;
};

/// Spanning decomposition into looped singletons and stars with at least one
/// leaf. Vertices are visited in increasing id order.
/// Throws PreconditionViolation if some vertex has degree 0.
StarDecomposition star_loop_decomposition(const LoopGraph& g);

/// Set dominated in both gx and gy of size at least ceil(|S|/3): an
/// independent set in the union of the two star decompositions, which is
/// dominated in both because every member keeps its star neighbours outside.
/// When |S| = 3
/// and the loopless union of the graphs is not a triangle the result has two
/// vertices. Throws std::invalid_argument on mismatched vertex sets or a
/// vertex of degree 0.
PairDominatedSetResult dominated_pair_min1(const LoopGraph& gx, const LoopGraph& gy);

/// (1 + ln(delta+1)) / (delta+1). Throws std::invalid_argument for delta < 2.
double epsilon_delta(int delta);

/// ceil((1 - eps_delta) * n), the guaranteed dominated-set size.
std::size_t min_degree_guarantee(std::size_t n, int delta);

struct DominationConfig {
  int sampling_attempts = 100;
};

struct MinDegreeStats {
  int attempts = 0;          ///< sampling rounds run
  bool used_fallback = false;  ///< true if the derandomized greedy produced D
};

/// Dominated set of size >= ceil((1 - eps_delta) n) in a graph with minimum
/// degree >= delta >= 2. Random sampling with p = 1 - ln(delta+1)/(delta+1),
/// then the method of conditional expectations if sampling keeps missing.
/// Throws PreconditionViolation if the minimum degree is below delta, and
/// std::invalid_argument if delta < 2.
DominatedSetResult dominated_min_degree(const LoopGraph& g, int delta, std::uint64_t seed,
                                        DominationConfig config = {},
                                        MinDegreeStats* stats = nullptr);

/// The derandomized greedy alone; deterministic.
DominatedSetResult dominated_min_degree_greedy(const LoopGraph& g, int delta);

/// Intersection of the two single-graph sets; size >= ceil((1 - 2 eps) |S|).
/// Requires delta >= 14 and a shared vertex set.
PairDominatedSetResult simultaneous_dominated_min_degree(const LoopGraph& gx, const LoopGraph& gy,
                                                         int delta, std::uint64_t seed,
                                                         DominationConfig config = {});

}  // namespace trace_turan
