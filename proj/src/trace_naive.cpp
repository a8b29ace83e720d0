// Reference detector. Deliberately shares nothing with the partner-table
// search in trace.cpp: pattern sets are enumerated outright and every
// candidate hyperedge is classified by intersecting it with the pattern set.

#include <algorithm>
#include <functional>

#include "trace_turan/trace.hpp"

namespace trace_turan {

namespace {

bool next_combination(std::vector<int>& idx, int pool) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < pool - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Vertex> intersect(const Triple& e, const std::vector<Vertex>& sorted_set) {
  std::vector<Vertex> out;
  std::set_intersection(e.begin(), e.end(), sorted_set.begin(), sorted_set.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<TraceCertificate> contains_trace_naive(const Hypergraph3& h, TracePattern pattern) {
  const int n = h.order();
  const int t = pattern.t();
  if (n < t + 2) return std::nullopt;

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v) {
        if (v != x && v != y) rest.push_back(v);
      }
      std::vector<int> idx(static_cast<std::size_t>(t));
      for (int i = 0; i < t; ++i) idx[i] = i;
      do {
        std::vector<Vertex> d;
        for (int i : idx) d.push_back(rest[i]);
        std::vector<Vertex> s = d;
        s.push_back(x);
        s.push_back(y);
        std::sort(s.begin(), s.end());

        // Pattern edges: {x, d_i} for i < t, then {y, d_i}.
        std::vector<std::vector<Triple>> options(static_cast<std::size_t>(2 * t));
        for (const Triple& e : h.edges()) {
          auto cut = intersect(e, s);
          if (cut.size() != 2) continue;
          for (int i = 0; i < t; ++i) {
            std::vector<Vertex> want_x{std::min(x, d[i]), std::max(x, d[i])};
            std::vector<Vertex> want_y{std::min(y, d[i]), std::max(y, d[i])};
            if (cut == want_x) options[i].push_back(e);
            if (cut == want_y) options[t + i].push_back(e);
          }
        }
        if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) {
          continue;
        }

        std::vector<Triple> pick(options.size());
        std::function<bool(std::size_t)> assign = [&](std::size_t k) {
          if (k == options.size()) return true;
          for (const Triple& e : options[k]) {
            if (std::find(pick.begin(), pick.begin() + static_cast<long>(k), e) !=
                pick.begin() + static_cast<long>(k)) {
              continue;
            }
            pick[k] = e;
            if (assign(k + 1)) return true;
          }
          return false;
        };
        if (assign(0)) {
          TraceCertificate cert;
          cert.x = x;
          cert.y = y;
          cert.d = d;
          cert.x_edges.assign(pick.begin(), pick.begin() + t);
          cert.y_edges.assign(pick.begin() + t, pick.end());
          return cert;
        }
      } while (next_combination(idx, static_cast<int>(rest.size())));
    }
  }
  return std::nullopt;
}

}  // namespace trace_turan
