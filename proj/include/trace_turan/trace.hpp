#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trace_turan/dominated_sets.hpp"
#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

/// K_{2,t}; t = 2 is C4.
class TracePattern {
 public:
  explicit TracePattern(int t) : t_(t) {
    if (t < 2) throw std::invalid_argument("K_{2,t} needs t >= 2");
  }
  int t() const { return t_; }

 private:
  int t_;
};

/// Witness that H contains K_{2,t} as a trace: the pattern lives on
/// {x, y} + D, and for each u in D (in order) `x_edges[i]` meets the pattern
/// vertex set in exactly {x, u} and `y_edges[i]` in exactly {y, u}.
struct TraceCertificate {
  Vertex x = -1;
  Vertex y = -1;
  std::vector<Vertex> d;
  std::vector<Triple> x_edges;
  std::vector<Triple> y_edges;

  int t() const { return static_cast<int>(d.size()); }
  friend bool operator==(const TraceCertificate&, const TraceCertificate&) = default;
};

/// Checks every certificate invariant against H, including |D| == t when a
/// pattern is supplied.
bool verify_certificate(const Hypergraph3& h, const TraceCertificate& cert);
bool verify_certificate(const Hypergraph3& h, const TraceCertificate& cert, TracePattern pattern);

/// "x y | d1 .. dt |" followed by one "x-u -> a b c" / "y-u -> a b c" line
/// per pattern edge (x side first, D ascending).
std::string format_certificate(const TraceCertificate& cert);

enum class DetectStatus { kFound, kAbsent, kTimeout };

struct TraceDetection {
  DetectStatus status = DetectStatus::kAbsent;
  std::optional<TraceCertificate> certificate;
};

struct DetectOptions {
  /// 0 means no limit. On expiry the result is kTimeout, never kAbsent.
  std::chrono::milliseconds time_budget{0};
  /// Worker threads over the (x, y) pairs; 1 keeps the returned certificate
  /// deterministic. 0 = hardware concurrency.
  int threads = 1;
};

/// Exact K_{2,t}-trace detector.
TraceDetection detect_trace(const Hypergraph3& h, TracePattern pattern, DetectOptions options = {});

/// Unbudgeted, single-threaded detect_trace.
std::optional<TraceCertificate> contains_trace(const Hypergraph3& h, TracePattern pattern);

/// Exhaustive reference: every (x, y, D) and every injective assignment of
/// hyperedges, using nothing but set intersections. Meant for n <= 10.
std::optional<TraceCertificate> contains_trace_naive(const Hypergraph3& h, TracePattern pattern);

/// Searches only for traces in H + new_edge that use new_edge, given that H
/// itself is trace-free. Throws std::invalid_argument if new_edge is in H.
std::optional<TraceCertificate> incremental_trace_check(const Hypergraph3& trace_free,
                                                        const Triple& new_edge, TracePattern pattern);

/// Traces in h whose assignment uses `edge`, which must be an edge of h.
/// Complete when h minus `edge` is trace-free. Throws std::invalid_argument
/// if `edge` is not in h.
std::optional<TraceCertificate> trace_using_edge(const Hypergraph3& h, const Triple& edge,
                                                 TracePattern pattern);

/// The certificate built from a set D dominated in both L_x(H, S, y) and
/// L_y(H, S, x): a loop at u gives an edge {x, u, w} with w outside S, an
/// outside neighbour w gives {x, u, w} with w in S \ D.
/// Throws std::invalid_argument if any witness is invalid or D is not a
/// subset of S.
TraceCertificate trace_from_dominated(const Hypergraph3& h, Vertex x, Vertex y,
                                      std::span<const Vertex> s, std::span<const Vertex> d,
                                      const WitnessMap& in_x, const WitnessMap& in_y);

/// True iff H contains a Berge K_{2,t}: distinct hyperedges e_{x,u} and
/// e_{y,u} containing the corresponding pattern edges.
bool contains_berge(const Hypergraph3& h, TracePattern pattern);

/// Berge copy witness, same layout as TraceCertificate with containment in
/// place of exact intersection.
std::optional<TraceCertificate> find_berge(const Hypergraph3& h, TracePattern pattern);

}  // namespace trace_turan
