#include "trace_turan/dominated_sets.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace trace_turan {

namespace {

bool contains_sorted(std::span<const Vertex> d, Vertex v) {
  return std::binary_search(d.begin(), d.end(), v);
}

std::vector<Vertex> sorted_copy(std::span<const Vertex> d) {
  std::vector<Vertex> out(d.begin(), d.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool witness_valid(const LoopGraph& g, std::span<const Vertex> d, Vertex v, const Witness& w) {
  if (!g.has_vertex(v)) return false;
  auto members = sorted_copy(d);
  if (w.kind == Witness::Kind::kLoop) return g.loops(v) > 0;
  return g.has_vertex(w.neighbor) && !contains_sorted(members, w.neighbor) &&
         g.has_edge(v, w.neighbor);
}

bool witnesses_valid(const LoopGraph& g, std::span<const Vertex> d, const WitnessMap& witnesses) {
  for (Vertex v : d) {
    auto it = witnesses.find(v);
    if (it == witnesses.end() || !witness_valid(g, d, v, it->second)) return false;
  }
  return true;
}

bool is_dominated(const LoopGraph& g, std::span<const Vertex> d) {
  auto members = sorted_copy(d);
  for (Vertex v : members) {
    if (!g.has_vertex(v)) return false;
    if (g.loops(v) > 0) continue;
    const auto& nbrs = g.neighbors(v);
    bool outside = std::any_of(nbrs.begin(), nbrs.end(),
                               [&](Vertex u) { return !contains_sorted(members, u); });
    if (!outside) return false;
  }
  return true;
}

WitnessMap make_witnesses(const LoopGraph& g, std::span<const Vertex> d) {
  auto members = sorted_copy(d);
  WitnessMap out;
  for (Vertex v : members) {
    if (g.loops(v) > 0) {
      out[v] = Witness::loop();
      continue;
    }
    const auto& nbrs = g.neighbors(v);
    auto it = std::find_if(nbrs.begin(), nbrs.end(),
                           [&](Vertex u) { return !contains_sorted(members, u); });
    if (it == nbrs.end()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not dominated");
    }
    out[v] = Witness::outside(*it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Star / loop decomposition

StarDecomposition star_loop_decomposition(const LoopGraph& g) {
  const auto& verts = g.vertices();
  std::vector<StarComponent> comps;
  std::vector<bool> alive;
  // component index per vertex, by position in `verts`
  std::vector<int> comp_of(verts.size(), -1);
  auto pos = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  auto make = [&](StarComponent c) {
    comps.push_back(std::move(c));
    alive.push_back(true);
    const int id = static_cast<int>(comps.size()) - 1;
    comp_of[pos(comps.back().center)] = id;
    for (Vertex leaf : comps.back().leaves) comp_of[pos(leaf)] = id;
  };

  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (comp_of[i] >= 0) continue;
    const Vertex v = verts[i];
    if (g.loops(v) > 0) {
      make({v, {}});
      continue;
    }
    std::vector<Vertex> leaves;
    for (Vertex u : g.neighbors(v)) {
      if (comp_of[pos(u)] < 0) leaves.push_back(u);
    }
    if (!leaves.empty()) {
      make({v, std::move(leaves)});
      continue;
    }
    if (g.neighbors(v).empty()) {
      throw PreconditionViolation("star_loop_decomposition: vertex " + std::to_string(v) +
                                  " has degree 0");
    }
    // Every neighbour is covered: repair using the smallest one.
    const Vertex u = g.neighbors(v).front();
    const int j = comp_of[pos(u)];
    StarComponent& other = comps[j];
    if (other.is_loop_vertex()) {
      alive[j] = false;
      make({v, {u}});
    } else if (other.center == u) {
      other.leaves.insert(std::lower_bound(other.leaves.begin(), other.leaves.end(), v), v);
      comp_of[i] = j;
    } else if (other.leaves.size() >= 2) {
      other.leaves.erase(std::find(other.leaves.begin(), other.leaves.end(), u));
      make({v, {u}});
    } else {
      // single edge {center, u}: recentre on u and attach v
      const Vertex w = other.center;
      other.center = u;
      other.leaves = {std::min(v, w), std::max(v, w)};
      comp_of[i] = j;
    }
  }

  StarDecomposition out;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (alive[j]) out.components.push_back(std::move(comps[j]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simultaneous domination with minimum degree 1

namespace {

void require_same_vertex_set(const LoopGraph& gx, const LoopGraph& gy) {
  if (gx.vertices() != gy.vertices()) {
    throw std::invalid_argument("graphs must share the same vertex set");
  }
}

/// Simple edges of a star decomposition, as sorted (center, leaf) pairs.
std::vector<std::pair<Vertex, Vertex>> star_edges(const StarDecomposition& dec) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const StarComponent& c : dec.components) {
    for (Vertex leaf : c.leaves) out.push_back({c.center, leaf});
  }
  return out;
}

/// Independent set of size >= |V|/3 in the union of two star forests on
/// `verts`. While some vertex has degree <= 2 it is taken and its closed
/// neighbourhood dropped. Once every degree is >= 3, no vertex is a leaf (or
/// isolated) in both remaining forests, and the three classes by
/// (center in x, center in y) are each independent; the largest is taken.
std::vector<Vertex> star_union_independent_set(const std::vector<Vertex>& verts,
                                               const std::vector<std::pair<Vertex, Vertex>>& fx,
                                               const std::vector<std::pair<Vertex, Vertex>>& fy) {
  const std::size_t n = verts.size();
  auto pos = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  // Per forest, the star neighbours of each vertex (positions).
  std::vector<std::vector<std::size_t>> nx(n), ny(n), nb(n);
  for (auto [c, l] : fx) {
    nx[pos(c)].push_back(pos(l));
    nx[pos(l)].push_back(pos(c));
  }
  for (auto [c, l] : fy) {
    ny[pos(c)].push_back(pos(l));
    ny[pos(l)].push_back(pos(c));
  }
  for (std::size_t v = 0; v < n; ++v) {
    nb[v] = nx[v];
    nb[v].insert(nb[v].end(), ny[v].begin(), ny[v].end());
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }

  std::vector<char> alive(n, 1);
  std::vector<Vertex> chosen;
  auto live_degree = [&](const std::vector<std::size_t>& list) {
    return static_cast<int>(std::count_if(list.begin(), list.end(), [&](std::size_t u) { return alive[u]; }));
  };
  while (true) {
    std::size_t pick = n;
    int best = 3;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      const int d = live_degree(nb[v]);
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    if (pick == n) break;
    chosen.push_back(verts[pick]);
    alive[pick] = 0;
    for (std::size_t u : nb[pick]) alive[u] = 0;
  }

  // A live vertex is a center of its remaining star in a forest when it has
  // two or more live star neighbours there, or one whose only live star
  // neighbour it is and it has the smaller position (a lone edge).
  auto is_center = [&](const std::vector<std::vector<std::size_t>>& nf, std::size_t v) {
    std::size_t only = n;
    int d = 0;
    for (std::size_t u : nf[v]) {
      if (alive[u]) {
        ++d;
        only = u;
      }
    }
    if (d >= 2) return true;
    if (d == 0) return false;
    return live_degree(nf[only]) == 1 && v < only;
  };
  std::vector<std::vector<Vertex>> classes(3);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    const bool cx = is_center(nx, v);
    const bool cy = is_center(ny, v);
    classes[cx && cy ? 0 : (cx ? 1 : 2)].push_back(verts[v]);
  }
  const auto largest = std::max_element(classes.begin(), classes.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
  chosen.insert(chosen.end(), largest->begin(), largest->end());
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

/// Witnesses for a set independent in the star forest of `dec`: a looped
/// singleton uses its loop, every other member a star neighbour.
WitnessMap witnesses_from_stars(const StarDecomposition& dec, const std::vector<Vertex>& members) {
  WitnessMap out;
  auto member = [&](Vertex v) { return std::binary_search(members.begin(), members.end(), v); };
  for (const StarComponent& c : dec.components) {
    if (c.is_loop_vertex()) {
      if (member(c.center)) out[c.center] = Witness::loop();
      continue;
    }
    if (member(c.center)) out[c.center] = Witness::outside(c.leaves.front());
    for (Vertex leaf : c.leaves) {
      if (member(leaf)) out[leaf] = Witness::outside(c.center);
    }
  }
  return out;
}

bool loopless_union_is_triangle(const LoopGraph& gx, const LoopGraph& gy) {
  const auto& v = gx.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!gx.has_edge(v[i], v[j]) && !gy.has_edge(v[i], v[j])) return false;
    }
  }
  return true;
}

}  // namespace

PairDominatedSetResult dominated_pair_min1(const LoopGraph& gx, const LoopGraph& gy) {
  require_same_vertex_set(gx, gy);
  if (gx.order() > 0 && (gx.min_degree() < 1 || gy.min_degree() < 1)) {
    throw std::invalid_argument("dominated_pair_min1: both graphs need minimum degree 1");
  }
  const StarDecomposition dx = star_loop_decomposition(gx);
  const StarDecomposition dy = star_loop_decomposition(gy);

  PairDominatedSetResult out;
  out.members = star_union_independent_set(gx.vertices(), star_edges(dx), star_edges(dy));

  if (gx.order() == 3 && out.members.size() < 2 && !loopless_union_is_triangle(gx, gy)) {
    const auto& v = gx.vertices();
    for (std::size_t i = 0; i < 3 && out.members.size() < 2; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (!gx.has_edge(v[i], v[j]) && !gy.has_edge(v[i], v[j])) {
          out.members = {v[i], v[j]};
          break;
        }
      }
    }
    out.in_x = make_witnesses(gx, out.members);
    out.in_y = make_witnesses(gy, out.members);
    return out;
  }

  out.in_x = witnesses_from_stars(dx, out.members);
  out.in_y = witnesses_from_stars(dy, out.members);
  return out;
}

// ---------------------------------------------------------------------------
// Minimum degree delta

double epsilon_delta(int delta) {
  if (delta < 2) throw std::invalid_argument("epsilon: delta must be >= 2");
  const double d1 = static_cast<double>(delta) + 1.0;
  return (1.0 + std::log(d1)) / d1;
}

std::size_t min_degree_guarantee(std::size_t n, int delta) {
  const double target = (1.0 - epsilon_delta(delta)) * static_cast<double>(n);
  return target <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(target));
}

namespace {

double sampling_probability(int delta) {
  const double d1 = static_cast<double>(delta) + 1.0;
  return 1.0 - std::log(d1) / d1;
}

void require_min_degree(const LoopGraph& g, int delta) {
  if (delta < 2) throw std::invalid_argument("delta must be >= 2");
  if (g.order() > 0 && g.min_degree() < delta) {
    throw PreconditionViolation("minimum degree " + std::to_string(g.min_degree()) +
                                " is below delta " + std::to_string(delta));
  }
}

/// D \ T for a chosen vertex subset, where T holds the loopless members all
/// of whose neighbours were chosen too.
DominatedSetResult finish(const LoopGraph& g, const std::vector<char>& chosen) {
  const auto& verts = g.vertices();
  auto picked = [&](Vertex u) {
    auto i = std::lower_bound(verts.begin(), verts.end(), u) - verts.begin();
    return chosen[static_cast<std::size_t>(i)] != 0;
  };
  DominatedSetResult out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!chosen[i]) continue;
    const Vertex v = verts[i];
    if (g.loops(v) > 0) {
      out.members.push_back(v);
      out.witnesses[v] = Witness::loop();
      continue;
    }
    for (Vertex u : g.neighbors(v)) {
      if (!picked(u)) {
        out.members.push_back(v);
        out.witnesses[v] = Witness::outside(u);
        break;
      }
    }
  }
  return out;
}

DominatedSetResult sample_once(const LoopGraph& g, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<char> chosen(g.order());
  for (auto& c : chosen) c = coin(rng) ? 1 : 0;
  return finish(g, chosen);
}

DominatedSetResult min_degree_impl(const LoopGraph& g, int delta, std::mt19937_64& rng,
                                   const DominationConfig& config, MinDegreeStats* stats) {
  require_min_degree(g, delta);
  const std::size_t need = min_degree_guarantee(g.order(), delta);
  const double p = sampling_probability(delta);
  MinDegreeStats local;
  for (int attempt = 0; attempt < config.sampling_attempts; ++attempt) {
    ++local.attempts;
    DominatedSetResult r = sample_once(g, p, rng);
    if (r.members.size() >= need) {
      if (stats) *stats = local;
      return r;
    }
  }
  local.used_fallback = true;
  if (stats) *stats = local;
  return dominated_min_degree_greedy(g, delta);
}

}  // namespace

DominatedSetResult dominated_min_degree_greedy(const LoopGraph& g, int delta) {
  require_min_degree(g, delta);
  const auto& verts = g.vertices();
  const std::size_t n = verts.size();
  const long double p = sampling_probability(delta);
  auto slot = [&](Vertex u) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
  };
  std::vector<std::vector<std::size_t>> closed(n);
  for (std::size_t i = 0; i < n; ++i) {
    closed[i].push_back(i);
    for (Vertex u : g.neighbors(verts[i])) closed[i].push_back(slot(u));
  }
  // Loopless w whose closed neighbourhood contains i.
  std::vector<std::vector<std::size_t>> watchers(n);
  for (std::size_t w = 0; w < n; ++w) {
    if (g.loops(verts[w]) > 0) continue;
    for (std::size_t i : closed[w]) watchers[i].push_back(w);
  }

  // Conditional expectation of |D| - |T|; deciding vertex i moves it by
  // x_i * (1 - sum_w prod_{z in N[w], z != i} P(z in D)).
  std::vector<long double> prob(n, p);
  std::vector<char> chosen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long double gain = 1.0L;
    for (std::size_t w : watchers[i]) {
      long double prod = 1.0L;
      for (std::size_t z : closed[w]) {
        if (z != i) prod *= prob[z];
      }
      gain -= prod;
    }
    chosen[i] = gain >= 0.0L ? 1 : 0;
    prob[i] = chosen[i] ? 1.0L : 0.0L;
  }
  DominatedSetResult out = finish(g, chosen);
  if (out.members.size() < min_degree_guarantee(n, delta)) {
    throw std::logic_error("derandomized domination fell below its guarantee");
  }
  return out;
}

DominatedSetResult dominated_min_degree(const LoopGraph& g, int delta, std::uint64_t seed,
                                        DominationConfig config, MinDegreeStats* stats) {
  std::mt19937_64 rng(seed);
  return min_degree_impl(g, delta, rng, config, stats);
}

PairDominatedSetResult simultaneous_dominated_min_degree(const LoopGraph& gx, const LoopGraph& gy,
                                                         int delta, std::uint64_t seed,
                                                         DominationConfig config) {
  require_same_vertex_set(gx, gy);
  if (delta < 14) throw std::invalid_argument("simultaneous domination needs delta >= 14");
  std::mt19937_64 rng(seed);
  DominatedSetResult dx = min_degree_impl(gx, delta, rng, config, nullptr);
  DominatedSetResult dy = min_degree_impl(gy, delta, rng, config, nullptr);
  PairDominatedSetResult out;
  std::set_intersection(dx.members.begin(), dx.members.end(), dy.members.begin(), dy.members.end(),
                        std::back_inserter(out.members));
  for (Vertex v : out.members) {
    out.in_x[v] = dx.witnesses.at(v);
    out.in_y[v] = dy.witnesses.at(v);
  }
  return out;
}

}  // namespace trace_turan
