#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

/// Raised when a search is asked for a size beyond its documented cap.
class SearchRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchResult {
  int n = 0;
  int t = 0;
  int value = 0;
  /// Pairwise non-isomorphic extremal hypergraphs, sorted by canonical form.
  std::vector<Hypergraph3> witnesses;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

inline constexpr int kOracleMaxN = 6;

struct SearchConfig {
  int max_n = 12;
  /// 0 = hardware concurrency.
  int threads = 1;
  std::size_t witness_cap = 100;
  /// Seed the incumbent with a greedy packing (prunes hopeless subtrees).
  bool greedy_lower_bound = true;
  std::uint64_t seed = 0x5eed;
};

/// Depth-first enumeration of all edge subsets in a fixed order, discarding a
/// branch as soon as it contains a trace. Refuses n > kOracleMaxN.
SearchResult turan_oracle(int n, int t);

/// Exact ex(n, Tr_3(K_{2,t})) by canonical augmentation: a child H + e is
/// kept only if e lies in the orbit of the canonically last edge of H + e,
/// and isomorphic children of one parent are merged. Children are tested
/// with incremental_trace_check. Refuses n > config.max_n.
SearchResult turan_search(int n, int t, SearchConfig config = {});

/// "n,t,value,witness_count,nodes,seconds"
std::string result_csv_header();
std::string result_csv_row(const SearchResult& r);

}  // namespace trace_turan
