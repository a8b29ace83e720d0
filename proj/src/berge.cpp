#include <algorithm>

#include "trace_turan/matching.hpp"
#include "trace_turan/trace.hpp"

namespace trace_turan {

namespace {

/// Pattern edges for D: {x, d_0..d_k}, then {y, d_0..d_k}; each may use any
/// hyperedge containing it, all distinct.
class BergeSearch {
 public:
  BergeSearch(const Hypergraph3& h, Vertex x, Vertex y, int t) : h_(h), x_(x), y_(y), t_(t) {
    for (Vertex u = 0; u < h.order(); ++u) {
      if (u == x || u == y) continue;
      if (h.codegree_unchecked(x, u) > 0 && h.codegree_unchecked(y, u) > 0) cands_.push_back(u);
    }
    std::stable_sort(cands_.begin(), cands_.end(), [&](Vertex a, Vertex b) {
      return std::min(h.codegree_unchecked(x, a), h.codegree_unchecked(y, a)) >
             std::min(h.codegree_unchecked(x, b), h.codegree_unchecked(y, b));
    });
  }

  std::optional<TraceCertificate> run() {
    if (static_cast<int>(cands_.size()) < t_) return std::nullopt;
    if (extend(0)) return cert_;
    return std::nullopt;
  }

 private:
  /// Hall's condition is monotone, so a D without a saturating matching has
  /// no feasible superset.
  bool matchable(bool record) {
    const auto& edges = h_.edges();
    std::vector<std::vector<int>> adj;
    for (Vertex side : {x_, y_}) {
      for (Vertex u : d_) {
        std::vector<int> row;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (triple_contains(edges[i], side) && triple_contains(edges[i], u)) {
            row.push_back(static_cast<int>(i));
          }
        }
        adj.push_back(std::move(row));
      }
    }
    BipartiteMatcher matcher(std::move(adj), static_cast<int>(edges.size()));
    matcher.solve();
    if (!matcher.saturates_left()) return false;
    if (record) {
      const std::size_t k = d_.size();
      cert_ = TraceCertificate{};
      cert_.x = x_;
      cert_.y = y_;
      cert_.d = d_;
      for (std::size_t i = 0; i < k; ++i) cert_.x_edges.push_back(edges[matcher.left_match()[i]]);
      for (std::size_t i = 0; i < k; ++i) cert_.y_edges.push_back(edges[matcher.left_match()[k + i]]);
    }
    return true;
  }

  bool extend(std::size_t from) {
    if (static_cast<int>(d_.size()) == t_) return matchable(true);
    const std::size_t missing = static_cast<std::size_t>(t_) - d_.size();
    for (std::size_t i = from; i + missing <= cands_.size(); ++i) {
      d_.push_back(cands_[i]);
      if (matchable(false) && extend(i + 1)) return true;
      d_.pop_back();
    }
    return false;
  }

  const Hypergraph3& h_;
  Vertex x_, y_;
  int t_;
  std::vector<Vertex> cands_;
  std::vector<Vertex> d_;
  TraceCertificate cert_;
};

}  // namespace

std::optional<TraceCertificate> find_berge(const Hypergraph3& h, TracePattern pattern) {
  if (static_cast<int>(h.size()) < 2 * pattern.t()) return std::nullopt;
  for (Vertex x = 0; x < h.order(); ++x) {
    for (Vertex y = x + 1; y < h.order(); ++y) {
      BergeSearch search(h, x, y, pattern.t());
      if (auto cert = search.run()) {
        std::vector<std::size_t> order(cert->d.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return cert->d[a] < cert->d[b]; });
        TraceCertificate sorted{cert->x, cert->y, {}, {}, {}};
        for (std::size_t i : order) {
          sorted.d.push_back(cert->d[i]);
          sorted.x_edges.push_back(cert->x_edges[i]);
          sorted.y_edges.push_back(cert->y_edges[i]);
        }
        return sorted;
      }
    }
  }
  return std::nullopt;
}

bool contains_berge(const Hypergraph3& h, TracePattern pattern) {
  return find_berge(h, pattern).has_value();
}

}  // namespace trace_turan
