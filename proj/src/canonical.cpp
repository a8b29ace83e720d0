#include "trace_turan/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace trace_turan {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

void put16(std::string& out, int v) {
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

class Canonicalizer {
 public:
  Canonicalizer(const Hypergraph3& h, std::span<const int> colors) : h_(h), n_(h.order()) {
    colors_.assign(static_cast<std::size_t>(n_), 0);
    if (!colors.empty()) {
      if (static_cast<int>(colors.size()) != n_) {
        throw std::invalid_argument("canonical_labeling: one color per vertex required");
      }
      std::copy(colors.begin(), colors.end(), colors_.begin());
      colored_ = true;
    }
    incidence_.resize(static_cast<std::size_t>(n_));
    for (const Triple& e : h.edges()) {
      incidence_[e[0]].push_back({e[1], e[2]});
      incidence_[e[1]].push_back({e[0], e[2]});
      incidence_[e[2]].push_back({e[0], e[1]});
    }
    find_twins();
  }

  CanonicalLabeling run() {
    std::map<int, std::vector<Vertex>> by_color;
    for (Vertex v = 0; v < n_; ++v) by_color[colors_[v]].push_back(v);
    Cells cells;
    for (auto& [color, members] : by_color) cells.push_back(std::move(members));
    if (n_ > 0) search(std::move(cells));
    return {best_form_, best_relabel_};
  }

 private:
  void find_twins() {
    twin_rep_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      for (Vertex u = 0; u < v; ++u) {
        if (twin_rep_[u] == u && colors_[u] == colors_[v] && swap_is_automorphism(u, v)) {
          twin_rep_[v] = u;
          break;
        }
      }
    }
  }

  bool swap_is_automorphism(Vertex u, Vertex v) const {
    if (incidence_[u].size() != incidence_[v].size()) return false;
    auto swapped = [&](Vertex w) { return w == u ? v : (w == v ? u : w); };
    for (Vertex a : {u, v}) {
      for (auto [p, q] : incidence_[a]) {
        if (p == u || p == v || q == u || q == v) continue;  // fixed by the swap
        if (!h_.contains(make_triple(swapped(a), p, q))) return false;
      }
    }
    return true;
  }

  void refine(Cells& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    while (true) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        for (Vertex v : cells[i]) cell_of[v] = static_cast<int>(i);
      }
      bool split = false;
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<std::vector<std::uint64_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::uint64_t> sig;
          sig.reserve(incidence_[v].size());
          for (auto [p, q] : incidence_[v]) {
            auto a = static_cast<std::uint64_t>(cell_of[p]);
            auto b = static_cast<std::uint64_t>(cell_of[q]);
            if (a > b) std::swap(a, b);
            sig.push_back((a << 32) | b);
          }
          std::sort(sig.begin(), sig.end());
          keyed.push_back({std::move(sig), v});
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<Vertex> part;
            for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
            next.push_back(std::move(part));
            start = i;
          }
        }
        if (next.size() > 0 && keyed.size() != next.back().size()) split = true;
      }
      cells = std::move(next);
      if (!split) return;
    }
  }

  void search(Cells cells) {
    refine(cells);
    auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (open == cells.end()) {
      std::vector<Vertex> relabel(static_cast<std::size_t>(n_));
      for (std::size_t i = 0; i < cells.size(); ++i) relabel[cells[i][0]] = static_cast<Vertex>(i);
      std::string form = encode(relabel);
      if (best_form_.empty() || form < best_form_) {
        best_form_ = std::move(form);
        best_relabel_ = std::move(relabel);
      }
      return;
    }
    const std::size_t at = static_cast<std::size_t>(open - cells.begin());
    std::vector<Vertex> branch = cells[at];
    std::sort(branch.begin(), branch.end());
    std::vector<Vertex> tried;
    for (Vertex v : branch) {
      if (std::find(tried.begin(), tried.end(), twin_rep_[v]) != tried.end()) continue;
      tried.push_back(twin_rep_[v]);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != at) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : cells[i]) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  std::string encode(const std::vector<Vertex>& relabel) const {
    std::string out = encode_relabeled(h_, relabel);
    if (colored_) {
      std::vector<int> by_label(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) by_label[relabel[v]] = colors_[v];
      for (int c : by_label) put16(out, c);
    }
    return out;
  }

  const Hypergraph3& h_;
  int n_;
  bool colored_ = false;
  std::vector<int> colors_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> incidence_;
  std::vector<Vertex> twin_rep_;
  std::string best_form_;
  std::vector<Vertex> best_relabel_;
};

/// Cheap isomorphism invariant of an edge inside h.
std::array<int, 6> edge_profile(const Hypergraph3& h, const Triple& e) {
  std::array<int, 3> deg{h.degree(e[0]), h.degree(e[1]), h.degree(e[2])};
  std::array<int, 3> cod{h.codegree_unchecked(e[0], e[1]), h.codegree_unchecked(e[0], e[2]),
                         h.codegree_unchecked(e[1], e[2])};
  std::sort(deg.begin(), deg.end());
  std::sort(cod.begin(), cod.end());
  return {deg[0], deg[1], deg[2], cod[0], cod[1], cod[2]};
}

}  // namespace

std::string encode_relabeled(const Hypergraph3& h, std::span<const Vertex> relabel) {
  std::vector<Triple> edges;
  edges.reserve(h.size());
  for (const Triple& e : h.edges()) {
    edges.push_back(make_triple(relabel[e[0]], relabel[e[1]], relabel[e[2]]));
  }
  std::sort(edges.begin(), edges.end());
  std::string out;
  out.reserve(4 + 6 * edges.size());
  put16(out, h.order());
  put16(out, static_cast<int>(edges.size()));
  for (const Triple& e : edges) {
    for (Vertex v : e) put16(out, v);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Hypergraph3& h, std::span<const int> colors) {
  if (h.order() == 0) return {encode_relabeled(h, {}), {}};
  return Canonicalizer(h, colors).run();
}

std::string canonical_form(const Hypergraph3& h) { return canonical_labeling(h).form; }

bool same_edge_orbit(const Hypergraph3& h, const Triple& a, const Triple& b) {
  if (a == b) return true;
  if (edge_profile(h, a) != edge_profile(h, b)) return false;
  std::vector<int> mark_a(static_cast<std::size_t>(h.order()), 1);
  std::vector<int> mark_b(mark_a);
  for (Vertex v : a) mark_a[v] = 0;
  for (Vertex v : b) mark_b[v] = 0;
  return canonical_labeling(h, mark_a).form == canonical_labeling(h, mark_b).form;
}

}  // namespace trace_turan
