#include "trace_turan/trace.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "trace_search.hpp"
#include "trace_turan/loop_graph.hpp"

namespace trace_turan {

namespace detail {

PartnerTable::PartnerTable(const Hypergraph3& h) : n_(h.order()) {
  const std::size_t n = static_cast<std::size_t>(n_);
  offsets_.assign(n * n + 1, 0);
  auto slot = [n](Vertex a, Vertex b) { return static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b); };
  for (const Triple& e : h.edges()) {
    const auto [p, q, r] = e;
    for (std::size_t sl : {slot(p, q), slot(q, p), slot(p, r), slot(r, p), slot(q, r), slot(r, q)}) {
      ++offsets_[sl + 1];
    }
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  data_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, which fills every list in ascending order.
  for (const Triple& e : h.edges()) {
    const auto [p, q, r] = e;
    data_[fill[slot(p, q)]++] = r;
    data_[fill[slot(q, p)]++] = r;
    data_[fill[slot(p, r)]++] = q;
    data_[fill[slot(r, p)]++] = q;
    data_[fill[slot(q, r)]++] = p;
    data_[fill[slot(r, q)]++] = p;
  }
}

Deadline::Deadline(std::chrono::milliseconds budget)
    : limited_(budget.count() > 0), end_(std::chrono::steady_clock::now() + budget) {}

bool Deadline::expired() {
  if (!limited_) return false;
  if (hit_) return true;
  if ((++counter_ & 0xFFFu) == 0 && std::chrono::steady_clock::now() >= end_) hit_ = true;
  return hit_;
}

namespace {

class PairSearch {
 public:
  PairSearch(const PartnerTable& table, const PairQuery& q, Deadline& deadline, PairWorkspace& ws)
      : table_(table),
        q_(q),
        deadline_(deadline),
        cands_(ws.cands),
        chosen_(ws.chosen),
        free_(ws.free),
        banned_(ws.banned),
        in_d_(ws.in_d),
        cnt_x_(ws.cnt_x),
        cnt_y_(ws.cnt_y),
        need_x_(ws.need_x),
        need_y_(ws.need_y) {
    const auto n = static_cast<std::size_t>(table.order());
    in_d_.assign(n, 0);
    banned_.assign(n, 0);
    cnt_x_.assign(n, 0);
    cnt_y_.assign(n, 0);
    need_x_.assign(n, 0);
    need_y_.assign(n, 0);
    cands_.clear();
    chosen_.clear();
    free_.clear();
  }

  PairResult run(const Hypergraph3& h) {
    const int n = table_.order();
    for (Vertex f : q_.forbidden) banned_[f] = 1;
    std::vector<Vertex>& cands = cands_;
    for (Vertex u = 0; u < n; ++u) {
      if (u == q_.x || u == q_.y || banned_[u]) continue;
      need_x_[u] = partner_count(q_.x, u, q_.y);
      need_y_[u] = partner_count(q_.y, u, q_.x);
      if (need_x_[u] > 0 && need_y_[u] > 0) cands.push_back(u);
    }
    PairResult result;
    if (q_.forced >= 0) {
      auto it = std::find(cands.begin(), cands.end(), q_.forced);
      if (it == cands.end()) return result;
      cands.erase(it);
    }
    // Most promising first: high co-degree on both sides.
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
      return std::min(h.codegree_unchecked(q_.x, a), h.codegree_unchecked(q_.y, a)) >
             std::min(h.codegree_unchecked(q_.x, b), h.codegree_unchecked(q_.y, b));
    });

    const int base = q_.forced >= 0 ? 1 : 0;
    if (static_cast<int>(cands_.size()) + base < q_.t) return result;

    if (q_.forced >= 0 && !add(q_.forced)) return result;

    // Vertices with at least t partners on both sides can never be blocked.
    std::vector<Vertex>& free = free_;
    for (Vertex u : cands_) {
      if (need_x_[u] >= q_.t && need_y_[u] >= q_.t) free.push_back(u);
    }
    bool forced_free = q_.forced < 0 || (need_x_[q_.forced] >= q_.t && need_y_[q_.forced] >= q_.t);
    if (forced_free && static_cast<int>(free.size()) + base >= q_.t) {
      for (int i = 0; base + i < q_.t; ++i) {
        add(free[i]);
        chosen_.push_back(free[i]);
      }
      result.outcome = PairOutcome::kFound;
      result.certificate = assemble();
      return result;
    }

    switch (extend(0, base)) {
      case Step::kFound:
        result.outcome = PairOutcome::kFound;
        result.certificate = assemble();
        break;
      case Step::kTimeout:
        result.outcome = PairOutcome::kTimeout;
        break;
      case Step::kNone:
        break;
    }
    return result;
  }

 private:
  enum class Step { kFound, kNone, kTimeout };

  int partner_count(Vertex a, Vertex u, Vertex skip) const {
    auto list = table_.partners(a, u);
    return static_cast<int>(list.size()) -
           (std::binary_search(list.begin(), list.end(), skip) ? 1 : 0);
  }

  /// Adds u to D, updating blocked counters. Returns false if some member is
  /// now blocked; the caller must still call remove(u).
  bool add(Vertex u) {
    in_d_[u] = 1;
    bool ok = true;
    auto side = [&](Vertex a, Vertex other, std::vector<int>& cnt, const std::vector<int>& need) {
      int own = 0;
      for (Vertex w : table_.partners(a, u)) {
        if (w == other || !in_d_[w]) continue;
        ++own;
        if (++cnt[w] >= need[w]) ok = false;
      }
      cnt[u] = own;
      if (own >= need[u]) ok = false;
    };
    side(q_.x, q_.y, cnt_x_, need_x_);
    side(q_.y, q_.x, cnt_y_, need_y_);
    return ok;
  }

  void remove(Vertex u) {
    auto side = [&](Vertex a, Vertex other, std::vector<int>& cnt) {
      for (Vertex w : table_.partners(a, u)) {
        if (w != other && in_d_[w]) --cnt[w];
      }
      cnt[u] = 0;
    };
    side(q_.x, q_.y, cnt_x_);
    side(q_.y, q_.x, cnt_y_);
    in_d_[u] = 0;
  }

  Step extend(std::size_t from, int size) {
    if (size == q_.t) return Step::kFound;
    const std::size_t missing = static_cast<std::size_t>(q_.t - size);
    for (std::size_t i = from; i + missing <= cands_.size(); ++i) {
      if (deadline_.expired()) return Step::kTimeout;
      const Vertex u = cands_[i];
      if (add(u)) {
        chosen_.push_back(u);
        Step s = extend(i + 1, size + 1);
        if (s != Step::kNone) return s;
        chosen_.pop_back();
      }
      remove(u);
    }
    return Step::kNone;
  }

  Triple pick_edge(Vertex a, Vertex other, Vertex u) const {
    for (Vertex w : table_.partners(a, u)) {
      if (w != other && !in_d_[w]) return make_triple(a, u, w);
    }
    throw std::logic_error("trace search: member lost its partner");
  }

  TraceCertificate assemble() {
    TraceCertificate cert;
    cert.x = q_.x;
    cert.y = q_.y;
    cert.d = chosen_;
    if (q_.forced >= 0) cert.d.push_back(q_.forced);
    std::sort(cert.d.begin(), cert.d.end());
    for (Vertex u : cert.d) {
      if (u == q_.forced && q_.forced_x_edge) {
        cert.x_edges.push_back(*q_.forced_x_edge);
      } else {
        cert.x_edges.push_back(pick_edge(q_.x, q_.y, u));
      }
    }
    for (Vertex u : cert.d) cert.y_edges.push_back(pick_edge(q_.y, q_.x, u));
    return cert;
  }

  const PartnerTable& table_;
  const PairQuery& q_;
  Deadline& deadline_;
  std::vector<Vertex>& cands_;
  std::vector<Vertex>& chosen_;
  std::vector<Vertex>& free_;
  std::vector<char>& banned_;
  std::vector<char>& in_d_;
  std::vector<int>&cnt_x_, &cnt_y_, &need_x_, &need_y_;
};

}  // namespace

PairResult search_pair(const PartnerTable& table, const Hypergraph3& h, const PairQuery& query,
                       Deadline& deadline, PairWorkspace& workspace) {
  PairSearch search(table, query, deadline, workspace);
  return search.run(h);
}

PairResult search_pair(const PartnerTable& table, const Hypergraph3& h, const PairQuery& query,
                       Deadline& deadline) {
  PairWorkspace workspace;
  return search_pair(table, h, query, deadline, workspace);
}

}  // namespace detail

// ---------------------------------------------------------------------------

bool verify_certificate(const Hypergraph3& h, const TraceCertificate& cert) {
  const int t = cert.t();
  if (t < 1 || static_cast<int>(cert.x_edges.size()) != t ||
      static_cast<int>(cert.y_edges.size()) != t) {
    return false;
  }
  std::vector<Vertex> pattern{cert.x, cert.y};
  pattern.insert(pattern.end(), cert.d.begin(), cert.d.end());
  for (Vertex v : pattern) {
    if (v < 0 || v >= h.order()) return false;
  }
  std::sort(pattern.begin(), pattern.end());
  if (std::adjacent_find(pattern.begin(), pattern.end()) != pattern.end()) return false;

  auto meets_exactly = [&](const Triple& e, Vertex a, Vertex b) {
    if (!h.contains(e)) return false;
    int hits = 0;
    for (Vertex v : e) hits += std::binary_search(pattern.begin(), pattern.end(), v) ? 1 : 0;
    return hits == 2 && triple_contains(e, a) && triple_contains(e, b);
  };
  std::vector<Triple> used;
  for (int i = 0; i < t; ++i) {
    if (!meets_exactly(cert.x_edges[i], cert.x, cert.d[i])) return false;
    if (!meets_exactly(cert.y_edges[i], cert.y, cert.d[i])) return false;
    used.push_back(cert.x_edges[i]);
    used.push_back(cert.y_edges[i]);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool verify_certificate(const Hypergraph3& h, const TraceCertificate& cert, TracePattern pattern) {
  return cert.t() == pattern.t() && verify_certificate(h, cert);
}

std::string format_certificate(const TraceCertificate& cert) {
  std::ostringstream os;
  os << cert.x << ' ' << cert.y << " |";
  for (Vertex u : cert.d) os << ' ' << u;
  os << " |\n";
  auto line = [&](char side, Vertex u, const Triple& e) {
    os << side << '-' << u << " -> " << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
  };
  for (std::size_t i = 0; i < cert.d.size(); ++i) line('x', cert.d[i], cert.x_edges[i]);
  for (std::size_t i = 0; i < cert.d.size(); ++i) line('y', cert.d[i], cert.y_edges[i]);
  return os.str();
}

TraceDetection detect_trace(const Hypergraph3& h, TracePattern pattern, DetectOptions options) {
  TraceDetection out;
  const int n = h.order();
  if (static_cast<int>(h.size()) < 2 * pattern.t() || n < pattern.t() + 3) return out;
  const detail::PartnerTable table(h);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) pairs.push_back({x, y});
  }

  int threads = options.threads;
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  if (threads == 1) {
    detail::Deadline deadline(options.time_budget);
    detail::PairWorkspace ws;
    bool timed_out = false;
    for (auto [x, y] : pairs) {
      detail::PairQuery q{x, y, pattern.t(), -1, {}, std::nullopt};
      detail::PairResult r = detail::search_pair(table, h, q, deadline, ws);
      if (r.outcome == detail::PairOutcome::kFound) {
        out.status = DetectStatus::kFound;
        out.certificate = std::move(r.certificate);
        return out;
      }
      if (r.outcome == detail::PairOutcome::kTimeout) timed_out = true;
      if (timed_out) break;
    }
    out.status = timed_out ? DetectStatus::kTimeout : DetectStatus::kAbsent;
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> done{false};
  std::atomic<bool> timed_out{false};
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      detail::Deadline deadline(options.time_budget);
      detail::PairWorkspace ws;
      while (!done.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= pairs.size()) return;
        detail::PairQuery q{pairs[i].first, pairs[i].second, pattern.t(), -1, {}, std::nullopt};
        detail::PairResult r = detail::search_pair(table, h, q, deadline, ws);
        if (r.outcome == detail::PairOutcome::kFound) {
          std::lock_guard lock(mu);
          if (!done.exchange(true)) out.certificate = std::move(r.certificate);
          return;
        }
        if (r.outcome == detail::PairOutcome::kTimeout) {
          timed_out = true;
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (out.certificate) {
    out.status = DetectStatus::kFound;
  } else {
    out.status = timed_out ? DetectStatus::kTimeout : DetectStatus::kAbsent;
  }
  return out;
}

std::optional<TraceCertificate> contains_trace(const Hypergraph3& h, TracePattern pattern) {
  return detect_trace(h, pattern).certificate;
}

std::optional<TraceCertificate> incremental_trace_check(const Hypergraph3& trace_free,
                                                        const Triple& new_edge,
                                                        TracePattern pattern) {
  if (trace_free.contains(new_edge)) {
    throw std::invalid_argument("incremental_trace_check: edge already present");
  }
  Hypergraph3 h = trace_free;
  h.add_edge(new_edge);
  return trace_using_edge(h, new_edge, pattern);
}

std::optional<TraceCertificate> trace_using_edge(const Hypergraph3& h, const Triple& edge,
                                                 TracePattern pattern) {
  if (!h.contains(edge)) throw std::invalid_argument("trace_using_edge: edge not in h");
  if (static_cast<int>(h.size()) < 2 * pattern.t()) return std::nullopt;
  const detail::PartnerTable table(h);
  detail::Deadline unlimited(std::chrono::milliseconds{0});
  detail::PairWorkspace ws;

  // The edge plays some pattern edge {x, u}; its third vertex w is outside
  // the pattern vertex set.
  for (int outside = 0; outside < 3; ++outside) {
    const Vertex w = edge[outside];
    const Vertex p = edge[(outside + 1) % 3];
    const Vertex q = edge[(outside + 2) % 3];
    const Vertex forbidden[] = {w};
    for (auto [x, u] : {std::pair{p, q}, std::pair{q, p}}) {
      for (Vertex y = 0; y < h.order(); ++y) {
        if (y == x || y == u || y == w) continue;
        // u needs a y-side edge avoiding x.
        auto yu = table.partners(y, u);
        if (yu.empty() || (yu.size() == 1 && yu[0] == x)) continue;
        detail::PairQuery query{x, y, pattern.t(), u, forbidden, edge};
        detail::PairResult r = detail::search_pair(table, h, query, unlimited, ws);
        if (r.outcome == detail::PairOutcome::kFound) return r.certificate;
      }
    }
  }
  return std::nullopt;
}

TraceCertificate trace_from_dominated(const Hypergraph3& h, Vertex x, Vertex y,
                                      std::span<const Vertex> s, std::span<const Vertex> d,
                                      const WitnessMap& in_x, const WitnessMap& in_y) {
  std::vector<Vertex> s_sorted(s.begin(), s.end());
  std::sort(s_sorted.begin(), s_sorted.end());
  std::vector<Vertex> d_sorted(d.begin(), d.end());
  std::sort(d_sorted.begin(), d_sorted.end());
  if (d_sorted.empty()) throw std::invalid_argument("trace_from_dominated: D is empty");
  if (!std::includes(s_sorted.begin(), s_sorted.end(), d_sorted.begin(), d_sorted.end())) {
    throw std::invalid_argument("trace_from_dominated: D must be a subset of S");
  }
  const LoopGraph lx = link_graph(h, x, s_sorted, y);
  const LoopGraph ly = link_graph(h, y, s_sorted, x);
  if (!witnesses_valid(lx, d_sorted, in_x) || !witnesses_valid(ly, d_sorted, in_y)) {
    throw std::invalid_argument("trace_from_dominated: invalid domination witness");
  }

  auto edge_for = [&](Vertex a, Vertex other, Vertex u, const Witness& wit) {
    if (wit.kind == Witness::Kind::kOutsideNeighbor) return make_triple(a, u, wit.neighbor);
    for (const Triple& e : h.edges()) {
      if (!triple_contains(e, a) || !triple_contains(e, u)) continue;
      const Vertex w = third_vertex(e, a, u);
      if (w != other && !std::binary_search(s_sorted.begin(), s_sorted.end(), w)) return e;
    }
    throw std::logic_error("loop witness without a matching hyperedge");
  };

  TraceCertificate cert;
  cert.x = x;
  cert.y = y;
  cert.d = d_sorted;
  for (Vertex u : d_sorted) cert.x_edges.push_back(edge_for(x, y, u, in_x.at(u)));
  for (Vertex u : d_sorted) cert.y_edges.push_back(edge_for(y, x, u, in_y.at(u)));
  if (!verify_certificate(h, cert)) {
    throw std::logic_error("trace_from_dominated produced an invalid certificate");
  }
  return cert;
}

}  // namespace trace_turan
