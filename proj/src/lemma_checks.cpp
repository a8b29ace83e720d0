#include "trace_turan/lemma_checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "trace_turan/decomposition.hpp"
#include "trace_turan/dominated_sets.hpp"
#include "trace_turan/loop_graph.hpp"

namespace trace_turan {

namespace {

Hypergraph3 sub_hypergraph(int n, const std::vector<Triple>& edges) {
  return Hypergraph3(n, std::span<const Triple>(edges));
}

std::vector<Triple> complement_edges(const Hypergraph3& h, const std::vector<Triple>& removed) {
  std::vector<Triple> out;
  std::set_difference(h.edges().begin(), h.edges().end(), removed.begin(), removed.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Vertex> covered_vertices(const std::vector<Triple>& edges) {
  std::vector<Vertex> out;
  for (const Triple& e : edges) out.insert(out.end(), e.begin(), e.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Certificate from a set dominated in both link graphs, cut down to t members.
std::optional<TraceCertificate> from_dominated(const Hypergraph3& h, Vertex x, Vertex y,
                                               const std::vector<Vertex>& s,
                                               const PairDominatedSetResult& r, int t) {
  if (static_cast<int>(r.members.size()) < t) return std::nullopt;
  std::vector<Vertex> d(r.members.begin(), r.members.begin() + t);
  WitnessMap in_x;
  WitnessMap in_y;
  for (Vertex u : d) {
    in_x.emplace(u, r.in_x.at(u));
    in_y.emplace(u, r.in_y.at(u));
  }
  try {
    return trace_from_dominated(h, x, y, s, d, in_x, in_y);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// t = 2 and |S| = 3 with the link graphs covering a triangle: two link
/// edges uv, uw at x give the trace {x,u,v}, {x,u,w}, {x,y,v}, {x,y,w} with
/// centres u and y.
std::optional<TraceCertificate> triangle_case(const Hypergraph3& h, Vertex x, Vertex y,
                                              const LoopGraph& lx, const LoopGraph& ly,
                                              const std::vector<Vertex>& s) {
  for (auto [center, other, link] : {std::tuple{x, y, &lx}, std::tuple{y, x, &ly}}) {
    for (Vertex u : s) {
      const auto nb = link->neighbors(u);
      if (nb.size() < 2) continue;
      const Vertex v = nb[0];
      const Vertex w = nb[1];
      TraceCertificate c;
      c.x = u;
      c.y = other;
      c.d = {v, w};
      c.x_edges = {make_triple(center, u, v), make_triple(center, u, w)};
      c.y_edges = {make_triple(center, other, v), make_triple(center, other, w)};
      if (verify_certificate(h, c)) return c;
    }
  }
  return std::nullopt;
}

class Checker {
 public:
  Checker(const Hypergraph3& h, int t, int delta, std::uint64_t seed)
      : h_(h), t_(t), delta_(delta), seed_(seed), pattern_(t) {
    a_ = small_codegree_edges(h);
    b_edges_ = complement_edges(h, a_);
    b_ = sub_hypergraph(h.order(), b_edges_);
    c_edges_ = high_codegree_edges(h, delta);
    c_ = sub_hypergraph(h.order(), c_edges_);
    eps_ = epsilon_delta(delta);
  }

  LemmaReport run() {
    LemmaReport report;
    report.checks.push_back(lemma_3_1());
    report.checks.push_back(lemma_3_3());
    report.checks.push_back(lemma_5_1());
    report.checks.push_back(lemma_5_2());
    report.checks.push_back(lemma_6_1());
    report.checks.push_back(lemma_6_2_6_3(true));
    report.checks.push_back(lemma_6_2_6_3(false));
    report.checks.push_back(lemma_6_4());
    for (auto& c : report.checks) {
      if (!c.violations.empty()) {
        c.status = CheckStatus::kViolated;
      } else {
        c.status = c.instances > 0 ? CheckStatus::kPass : CheckStatus::kVacuous;
      }
    }
    return report;
  }

 private:
  /// Keeps `attempt` if it verifies, else falls back to the exact detector.
  void certify(LemmaViolation& v, std::optional<TraceCertificate> attempt) {
    if (attempt && verify_certificate(h_, *attempt, pattern_)) {
      v.certificate = std::move(attempt);
      return;
    }
    if (!fallback_done_) {
      fallback_ = contains_trace(h_, pattern_);
      fallback_done_ = true;
    }
    v.certificate = fallback_;
    v.certificate_search_exhausted = !fallback_.has_value();
  }

  std::vector<Vertex> common_partners(const Hypergraph3& g, Vertex x, Vertex y) const {
    std::vector<Vertex> s;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u != x && u != y && g.contains(make_triple(x, y, u))) s.push_back(u);
    }
    return s;
  }

  CheckOutcome lemma_3_1() {
    CheckOutcome out{"3.1", CheckStatus::kVacuous, 0, {}};
    const int bound = t_ == 2 ? 2 : 3 * t_ - 3;
    for (Vertex x = 0; x < h_.order(); ++x) {
      for (Vertex y = x + 1; y < h_.order(); ++y) {
        const int d = b_.codegree_unchecked(x, y);
        if (d == 0) continue;
        ++out.instances;
        if (d <= bound) continue;
        LemmaViolation v{"3.1", {x, y}, static_cast<double>(d), static_cast<double>(bound), {}, false};
        const auto s = common_partners(b_, x, y);
        std::optional<TraceCertificate> attempt;
        try {
          const LoopGraph lx = link_graph(h_, x, s, y);
          const LoopGraph ly = link_graph(h_, y, s, x);
          attempt = from_dominated(h_, x, y, s, dominated_pair_min1(lx, ly), t_);
          if (!attempt && t_ == 2) attempt = triangle_case(h_, x, y, lx, ly, s);
        } catch (const std::exception&) {
        }
        certify(v, std::move(attempt));
        out.violations.push_back(std::move(v));
      }
    }
    return out;
  }

  CheckOutcome lemma_3_3() {
    CheckOutcome out{"3.3", CheckStatus::kVacuous, 0, {}};
    if (delta_ < 14) return out;
    const double bound = (1.0 + 4.0 * eps_) * t_ - 1.0;
    for (Vertex x = 0; x < h_.order(); ++x) {
      for (Vertex y = x + 1; y < h_.order(); ++y) {
        const int d = c_.codegree_unchecked(x, y);
        if (d == 0) continue;
        ++out.instances;
        if (d <= bound) continue;
        LemmaViolation v{"3.3", {x, y}, static_cast<double>(d), bound, {}, false};
        const auto s = common_partners(c_, x, y);
        std::optional<TraceCertificate> attempt;
        try {
          const LoopGraph lx = link_graph(h_, x, s, y);
          const LoopGraph ly = link_graph(h_, y, s, x);
          attempt = from_dominated(h_, x, y, s, simultaneous_dominated_min_degree(lx, ly, delta_, seed_), t_);
        } catch (const std::exception&) {
        }
        certify(v, std::move(attempt));
        out.violations.push_back(std::move(v));
      }
    }
    return out;
  }

  CheckOutcome lemma_5_1() {
    CheckOutcome out{"5.1", CheckStatus::kVacuous, 0, {}};
    if (delta_ < 14 || c_edges_.empty()) return out;
    const double k = std::max<double>(max_codegree_in(c_edges_), (1.0 + 4.0 * eps_) * t_);
    const double bound = k + 25.0 * k * t_;
    for (Vertex x : covered_vertices(c_edges_)) {
      const Neighborhoods nb = neighborhoods(c_, x, c_edges_);
      for (Vertex y : nb.first) {
        ++out.instances;
        int count = 0;
        for (const Triple& e : c_edges_) {
          if (!triple_contains(e, y)) continue;
          int inside = 0;
          for (Vertex w : e) inside += std::binary_search(nb.first.begin(), nb.first.end(), w) ? 1 : 0;
          if (inside >= 2) ++count;
        }
        if (count < bound) continue;
        LemmaViolation v{"5.1", {x, y}, static_cast<double>(count), bound, {}, false};
        certify(v, std::nullopt);
        out.violations.push_back(std::move(v));
      }
    }
    return out;
  }

  CheckOutcome lemma_5_2() {
    CheckOutcome out{"5.2", CheckStatus::kVacuous, 0, {}};
    if (delta_ < 14 || c_edges_.empty()) return out;
    const double bound = ((1.0 + 4.0 * eps_) * t_ - 1.0) * h_.order();
    for (Vertex v : covered_vertices(c_edges_)) {
      ++out.instances;
      const Neighborhoods nb = neighborhoods(c_, v, c_edges_);
      std::map<Vertex, std::vector<Vertex>> hit;  // x -> the u with x in V_u
      long long sum = 0;
      for (Vertex u : nb.first) {
        const EuVu ev = eu_vu(nb, u, c_edges_);
        sum += static_cast<long long>(ev.vertices.size());
        for (Vertex x : ev.vertices) hit[x].push_back(u);
      }
      if (sum <= bound) continue;
      LemmaViolation viol{"5.2", {v}, static_cast<double>(sum), bound, {}, false};
      std::optional<TraceCertificate> attempt;
      auto best = std::max_element(hit.begin(), hit.end(), [](const auto& a, const auto& b) {
        return a.second.size() < b.second.size();
      });
      if (best != hit.end()) {
        const Vertex x = best->first;
        const auto& s = best->second;
        try {
          const LoopGraph lv = link_graph(h_, v, s, x);
          const LoopGraph lx = link_graph(h_, x, s, v);
          attempt = from_dominated(h_, v, x, s, simultaneous_dominated_min_degree(lv, lx, delta_, seed_), t_);
        } catch (const std::exception&) {
        }
      }
      certify(viol, std::move(attempt));
      out.violations.push_back(std::move(viol));
    }
    return out;
  }

  /// Trace inside B is a trace inside H.
  std::optional<TraceCertificate> b_trace() {
    if (!b_trace_done_) {
      b_trace_ = contains_trace(b_, pattern_);
      b_trace_done_ = true;
    }
    return b_trace_;
  }

  const std::vector<std::vector<Vertex>>& b_first_neighborhoods() {
    if (b_n1_.empty()) {
      for (Vertex v = 0; v < h_.order(); ++v) b_n1_.push_back(neighborhoods(b_, v, b_edges_).first);
    }
    return b_n1_;
  }

  CheckOutcome lemma_6_1() {
    CheckOutcome out{"6.1", CheckStatus::kVacuous, 0, {}};
    if (t_ != 2 || b_edges_.empty()) return out;
    const auto& n1 = b_first_neighborhoods();
    for (Vertex x = 0; x < h_.order(); ++x) {
      for (Vertex y = x + 1; y < h_.order(); ++y) {
        if (n1[x].empty() || n1[y].empty()) continue;
        ++out.instances;
        std::vector<Vertex> common;
        std::set_intersection(n1[x].begin(), n1[x].end(), n1[y].begin(), n1[y].end(),
                              std::back_inserter(common));
        if (common.size() <= 7) continue;
        LemmaViolation v{"6.1", {x, y}, static_cast<double>(common.size()), 7.0, {}, false};
        certify(v, b_trace());
        out.violations.push_back(std::move(v));
      }
    }
    return out;
  }

  /// 6.2 (pairwise |V_u & V_w| over B-edges at v) or 6.3 (|V_u| vs d_B(u)).
  CheckOutcome lemma_6_2_6_3(bool pairwise) {
    CheckOutcome out{pairwise ? "6.2" : "6.3", CheckStatus::kVacuous, 0, {}};
    if (t_ != 2 || b_edges_.empty()) return out;
    for (Vertex v : covered_vertices(b_edges_)) {
      const Neighborhoods nb = neighborhoods(b_, v, b_edges_);
      std::map<Vertex, std::vector<Vertex>> vu;
      for (Vertex u : nb.first) vu[u] = eu_vu(nb, u, b_edges_).vertices;
      if (pairwise) {
        for (const Triple& e : b_.edges_containing(v)) {
          Vertex u = -1;
          Vertex w = -1;
          for (Vertex z : e) {
            if (z == v) continue;
            (u < 0 ? u : w) = z;
          }
          ++out.instances;
          std::vector<Vertex> both;
          std::set_intersection(vu[u].begin(), vu[u].end(), vu[w].begin(), vu[w].end(),
                                std::back_inserter(both));
          if (both.size() <= 7) continue;
          LemmaViolation viol{"6.2", {v, u, w}, static_cast<double>(both.size()), 7.0, {}, false};
          certify(viol, b_trace());
          out.violations.push_back(std::move(viol));
        }
      } else {
        for (Vertex u : nb.first) {
          ++out.instances;
          const double observed = static_cast<double>(vu[u].size());
          const double bound = static_cast<double>(b_.degree(u)) - 16.0;
          if (observed >= bound) continue;
          LemmaViolation viol{"6.3", {v, u}, observed, bound, {}, false};
          certify(viol, b_trace());
          out.violations.push_back(std::move(viol));
        }
      }
    }
    return out;
  }

  CheckOutcome lemma_6_4() {
    CheckOutcome out{"6.4", CheckStatus::kVacuous, 0, {}};
    if (t_ != 2 || b_edges_.empty()) return out;
    for (Vertex v : covered_vertices(b_edges_)) {
      ++out.instances;
      const Neighborhoods nb = neighborhoods(b_, v, b_edges_);
      long long sum = 0;
      for (Vertex u : nb.first) sum += static_cast<long long>(eu_vu(nb, u, b_edges_).vertices.size());
      const double bound = h_.order() + 14.0 * b_.degree(v);
      if (sum <= bound) continue;
      LemmaViolation viol{"6.4", {v}, static_cast<double>(sum), bound, {}, false};
      certify(viol, b_trace());
      out.violations.push_back(std::move(viol));
    }
    return out;
  }

  const Hypergraph3& h_;
  int t_;
  int delta_;
  std::uint64_t seed_;
  TracePattern pattern_;
  double eps_ = 0.0;
  std::vector<Triple> a_;
  std::vector<Triple> b_edges_;
  Hypergraph3 b_{0};
  std::vector<Triple> c_edges_;
  Hypergraph3 c_{0};
  std::vector<std::vector<Vertex>> b_n1_;
  bool fallback_done_ = false;
  std::optional<TraceCertificate> fallback_;
  bool b_trace_done_ = false;
  std::optional<TraceCertificate> b_trace_;
};

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kVacuous:
      return "vacuous";
    case CheckStatus::kViolated:
      return "violated";
  }
  return "unknown";
}

std::vector<LemmaViolation> LemmaReport::violations() const {
  std::vector<LemmaViolation> out;
  for (const auto& c : checks) out.insert(out.end(), c.violations.begin(), c.violations.end());
  return out;
}

LemmaReport run_lemma_checks(const Hypergraph3& h, int t, int delta, std::uint64_t seed) {
  if (t < 2) throw std::invalid_argument("run_lemma_checks: t must be >= 2");
  if (delta < 2) throw std::invalid_argument("run_lemma_checks: delta must be >= 2");
  return Checker(h, t, delta, seed).run();
}

std::vector<LemmaViolation> check_lemma_invariants(const Hypergraph3& h, int t, int delta,
                                                   std::uint64_t seed) {
  return run_lemma_checks(h, t, delta, seed).violations();
}

std::string to_json_line(const CheckOutcome& outcome) {
  nlohmann::json j;
  j["lemma"] = outcome.lemma;
  j["status"] = to_string(outcome.status);
  j["instances"] = outcome.instances;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : outcome.violations) {
    nlohmann::json jv;
    jv["witness"] = v.witness;
    jv["observed"] = v.observed;
    jv["bound"] = v.bound;
    if (v.certificate) {
      jv["certificate"] = format_certificate(*v.certificate);
    } else {
      jv["certificate"] = nullptr;
    }
    jv["certificate_status"] = v.certificate ? "verified" : "certificate search exhausted";
    j["violations"].push_back(std::move(jv));
  }
  return j.dump();
}

}  // namespace trace_turan
