#include "trace_turan/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "trace_turan/search.hpp"

namespace trace_turan {

namespace {

/// At most k of `lits` true (Sinz). Fresh variables come from f.variables.
void at_most(CnfFormula& f, const std::vector<int>& lits, int k) {
  const int count = static_cast<int>(lits.size());
  if (k >= count) return;
  if (k < 0) {
    f.clauses.push_back({});
    return;
  }
  if (k == 0) {
    for (int l : lits) f.clauses.push_back({-l});
    return;
  }
  // s(i, j): among the first i+1 literals at least j+1 are true.
  auto s = [&, base = f.variables](int i, int j) { return base + i * k + j + 1; };
  f.variables += (count - 1) * k;
  f.clauses.push_back({-lits[0], s(0, 0)});
  for (int j = 1; j < k; ++j) f.clauses.push_back({-s(0, j)});
  for (int i = 1; i < count - 1; ++i) {
    f.clauses.push_back({-lits[i], s(i, 0)});
    f.clauses.push_back({-s(i - 1, 0), s(i, 0)});
    for (int j = 1; j < k; ++j) {
      f.clauses.push_back({-lits[i], -s(i - 1, j - 1), s(i, j)});
      f.clauses.push_back({-s(i - 1, j), s(i, j)});
    }
    f.clauses.push_back({-lits[i], -s(i - 1, k - 1)});
  }
  f.clauses.push_back({-lits[count - 1], -s(count - 2, k - 1)});
}

}  // namespace

CnfFormula build_turan_cnf(int n, int m, int t) {
  if (n < 0) throw std::invalid_argument("build_turan_cnf: negative n");
  if (t < 2) throw std::invalid_argument("build_turan_cnf: t must be >= 2");
  if (n > kCnfMaxN) {
    throw SearchRefused("build_turan_cnf: n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kCnfMaxN));
  }
  CnfFormula f;
  f.triples = all_triples_colex(n);
  f.variables = static_cast<int>(f.triples.size());
  std::map<Triple, int> var;
  for (std::size_t i = 0; i < f.triples.size(); ++i) var[f.triples[i]] = static_cast<int>(i) + 1;

  std::set<std::vector<int>> blocking;
  std::vector<Vertex> d;
  std::vector<int> clause;
  // Pattern edges in order: x-u for u in D, then y-u; each picks an outside w.
  auto assign = [&](auto&& self, Vertex x, Vertex y, const std::vector<Vertex>& outside,
                    std::size_t slot) -> void {
    if (slot == 2 * d.size()) {
      std::vector<int> sorted = clause;
      std::sort(sorted.begin(), sorted.end());
      blocking.insert(std::move(sorted));
      return;
    }
    const Vertex center = slot < d.size() ? x : y;
    const Vertex u = d[slot % d.size()];
    for (Vertex w : outside) {
      clause.push_back(-var.at(make_triple(center, u, w)));
      self(self, x, y, outside, slot + 1);
      clause.pop_back();
    }
  };
  auto choose = [&](auto&& self, Vertex x, Vertex y, Vertex from) -> void {
    if (static_cast<int>(d.size()) == t) {
      std::vector<Vertex> outside;
      for (Vertex w = 0; w < n; ++w) {
        if (w != x && w != y && std::find(d.begin(), d.end(), w) == d.end()) outside.push_back(w);
      }
      assign(assign, x, y, outside, 0);
      return;
    }
    for (Vertex u = from; u < n; ++u) {
      if (u == x || u == y) continue;
      d.push_back(u);
      self(self, x, y, u + 1);
      d.pop_back();
    }
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) choose(choose, x, y, 0);
  }
  f.clauses.assign(blocking.begin(), blocking.end());

  std::vector<int> negated;
  for (int v = 1; v <= static_cast<int>(f.triples.size()); ++v) negated.push_back(-v);
  if (m > 0) at_most(f, negated, static_cast<int>(f.triples.size()) - m);
  return f;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int l : c) out << l << ' ';
    out << "0\n";
  }
}

void export_cnf(int n, int m, int t, const std::string& path) {
  const CnfFormula f = build_turan_cnf(n, m, t);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_dimacs(out, f);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

Hypergraph3 decode_model(int n, const CnfFormula& f, const std::vector<bool>& model) {
  Hypergraph3 h(n);
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    if (i + 1 < model.size() && model[i + 1]) h.add_edge(f.triples[i]);
  }
  return h;
}

}  // namespace trace_turan
