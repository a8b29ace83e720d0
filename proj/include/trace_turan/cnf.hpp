#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

inline constexpr int kCnfMaxN = 7;

/// DIMACS-style formula. Variables 1..triples.size() stand for the triples in
/// colex order; higher variables are cardinality-counter auxiliaries.
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<Triple> triples;
};

/// Satisfiable iff some n-vertex hypergraph with at least m edges has no
/// K_{2,t} trace. Every trace template (x, y, D and one outside vertex per
/// pattern edge) gets a blocking clause; "at least m" is a sequential counter
/// over the negated edge variables. Throws SearchRefused for n > kCnfMaxN.
CnfFormula build_turan_cnf(int n, int m, int t);

void write_dimacs(std::ostream& out, const CnfFormula& f);

/// build_turan_cnf + write_dimacs to `path`. Throws std::runtime_error if the
/// file cannot be written.
void export_cnf(int n, int m, int t, const std::string& path);

/// Hypergraph whose edges are the triple variables set true in `model`
/// (model[v] for variable v; index 0 unused).
Hypergraph3 decode_model(int n, const CnfFormula& f, const std::vector<bool>& model);

}  // namespace trace_turan
