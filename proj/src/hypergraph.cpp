#include "trace_turan/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace trace_turan {

Triple make_triple(Vertex a, Vertex b, Vertex c) {
  if (a == b || b == c || a == c) {
    throw std::invalid_argument("triple needs three distinct vertices");
  }
  Triple e{a, b, c};
  std::sort(e.begin(), e.end());
  return e;
}

bool triple_contains(const Triple& e, Vertex v) {
  return e[0] == v || e[1] == v || e[2] == v;
}

Vertex third_vertex(const Triple& e, Vertex a, Vertex b) {
  for (Vertex v : e) {
    if (v != a && v != b) return v;
  }
  throw std::invalid_argument("third_vertex: edge does not contain the pair");
}

bool colex_less(const Triple& a, const Triple& b) {
  if (a[2] != b[2]) return a[2] < b[2];
  if (a[1] != b[1]) return a[1] < b[1];
  return a[0] < b[0];
}

Hypergraph3::Hypergraph3(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  codeg_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Hypergraph3::Hypergraph3(int n, std::span<const Triple> edges) : Hypergraph3(n) {
  for (const Triple& raw : edges) {
    Triple e = make_triple(raw[0], raw[1], raw[2]);
    if (!add_edge(e)) {
      throw std::invalid_argument("duplicate edge " + to_string(e));
    }
  }
}

Hypergraph3::Hypergraph3(int n, std::initializer_list<Triple> edges)
    : Hypergraph3(n, std::span<const Triple>(edges.begin(), edges.size())) {}

void Hypergraph3::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
  }
}

void Hypergraph3::check_triple(const Triple& e) const {
  for (Vertex v : e) check_vertex(v);
  if (!(e[0] < e[1] && e[1] < e[2])) {
    throw std::invalid_argument("edge must be a sorted triple of distinct vertices");
  }
}

bool Hypergraph3::contains(const Triple& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void Hypergraph3::bump(const Triple& e, int delta) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      codeg_[index(e[i], e[j])] += delta;
      codeg_[index(e[j], e[i])] += delta;
    }
  }
}

bool Hypergraph3::add_edge(const Triple& e) {
  check_triple(e);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  bump(e, +1);
  return true;
}

bool Hypergraph3::remove_edge(const Triple& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return false;
  edges_.erase(it);
  bump(e, -1);
  return true;
}

int Hypergraph3::codegree(Vertex x, Vertex y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw std::invalid_argument("codegree needs two distinct vertices");
  return codeg_[index(x, y)];
}

int Hypergraph3::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Triple& e) { return triple_contains(e, v); }));
}

std::vector<Triple> Hypergraph3::edges_containing(Vertex v) const {
  std::vector<Triple> out;
  for (const Triple& e : edges_) {
    if (triple_contains(e, v)) out.push_back(e);
  }
  return out;
}

int Hypergraph3::max_codegree() const {
  return codeg_.empty() ? 0 : *std::max_element(codeg_.begin(), codeg_.end());
}

int codegree_in(std::span<const Triple> edges, Vertex x, Vertex y) {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Triple& e) {
    return triple_contains(e, x) && triple_contains(e, y);
  }));
}

int max_codegree_in(std::span<const Triple> edges) {
  std::map<std::pair<Vertex, Vertex>, int> counts;
  int best = 0;
  for (const Triple& e : edges) {
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      best = std::max(best, ++counts[{e[i], e[j]}]);
    }
  }
  return best;
}

std::string to_string(const Triple& e) {
  std::ostringstream os;
  os << '{' << e[0] << ',' << e[1] << ',' << e[2] << '}';
  return os.str();
}

std::vector<Triple> all_triples_colex(int n) {
  std::vector<Triple> out;
  for (Vertex c = 2; c < n; ++c) {
    for (Vertex b = 1; b < c; ++b) {
      for (Vertex a = 0; a < b; ++a) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace trace_turan
