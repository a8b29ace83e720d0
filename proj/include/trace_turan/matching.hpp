#pragma once

#include <vector>

namespace trace_turan {

/// Maximum bipartite matching by augmenting paths (Kuhn). Left vertices are
/// 0..adjacency.size()-1, right vertices 0..right_count-1.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::vector<std::vector<int>> adjacency, int right_count);

  /// Greedy seed, then one augmenting-path search per unmatched left vertex.
  /// Returns the matching size.
  int solve();

  /// Right partner of each left vertex, -1 if unmatched.
  const std::vector<int>& left_match() const { return match_left_; }
  bool saturates_left() const;

 private:
  bool augment(int left, std::vector<char>& seen);

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
};

}  // namespace trace_turan
