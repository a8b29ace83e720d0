#pragma once

// Shared kernel of the exact trace detector and the incremental check.

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "trace_turan/hypergraph.hpp"
#include "trace_turan/trace.hpp"

namespace trace_turan::detail {

/// partners(a, b): sorted third vertices w with {a, b, w} in H.
class PartnerTable {
 public:
  explicit PartnerTable(const Hypergraph3& h);
  std::span<const Vertex> partners(Vertex a, Vertex b) const {
    const std::size_t slot = static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                             static_cast<std::size_t>(b);
    return {data_.data() + offsets_[slot], data_.data() + offsets_[slot + 1]};
  }
  int order() const { return n_; }

 private:
  int n_;
  // CSR layout: the list for slot a*n+b is data_[offsets_[slot], offsets_[slot+1]).
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> data_;
};

/// Scratch buffers reused across search_pair calls on one thread.
struct PairWorkspace {
  std::vector<char> in_d;
  std::vector<char> banned;
  std::vector<int> cnt_x, cnt_y, need_x, need_y;
  std::vector<Vertex> cands, chosen, free;
};

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget);
  /// Cheap; consults the clock every few thousand calls.
  bool expired();

 private:
  bool limited_;
  bool hit_ = false;
  std::chrono::steady_clock::time_point end_;
  unsigned counter_ = 0;
};

struct PairQuery {
  Vertex x = -1;
  Vertex y = -1;
  int t = 2;
  Vertex forced = -1;             ///< must be in D (or -1)
  std::span<const Vertex> forbidden;  ///< never in D
  /// x-side edge to use for `forced` in the certificate, if any
  std::optional<Triple> forced_x_edge;
};

enum class PairOutcome { kFound, kAbsent, kTimeout };

struct PairResult {
  PairOutcome outcome = PairOutcome::kAbsent;
  TraceCertificate certificate;
};

/// Finds D of size t such that every u in D has a partner with x outside
/// D + {y} and a partner with y outside D + {x}. Adding vertices to D can only
/// break these conditions, so violated branches are cut immediately.
PairResult search_pair(const PartnerTable& table, const Hypergraph3& h, const PairQuery& query,
                       Deadline& deadline);
PairResult search_pair(const PartnerTable& table, const Hypergraph3& h, const PairQuery& query,
                       Deadline& deadline, PairWorkspace& workspace);

}  // namespace trace_turan::detail
