#include "trace_turan/matching.hpp"

#include <algorithm>

namespace trace_turan {

BipartiteMatcher::BipartiteMatcher(std::vector<std::vector<int>> adjacency, int right_count)
    : adj_(std::move(adjacency)),
      match_left_(adj_.size(), -1),
      match_right_(static_cast<std::size_t>(right_count), -1) {}

bool BipartiteMatcher::augment(int left, std::vector<char>& seen) {
  for (int r : adj_[left]) {
    if (seen[r]) continue;
    seen[r] = 1;
    if (match_right_[r] < 0 || augment(match_right_[r], seen)) {
      match_left_[left] = r;
      match_right_[r] = left;
      return true;
    }
  }
  return false;
}

int BipartiteMatcher::solve() {
  std::fill(match_left_.begin(), match_left_.end(), -1);
  std::fill(match_right_.begin(), match_right_.end(), -1);
  int size = 0;
  for (std::size_t l = 0; l < adj_.size(); ++l) {
    for (int r : adj_[l]) {
      if (match_right_[r] < 0) {
        match_left_[l] = r;
        match_right_[r] = static_cast<int>(l);
        ++size;
        break;
      }
    }
  }
  std::vector<char> seen(match_right_.size());
  for (std::size_t l = 0; l < adj_.size(); ++l) {
    if (match_left_[l] >= 0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(static_cast<int>(l), seen)) ++size;
  }
  return size;
}

bool BipartiteMatcher::saturates_left() const {
  return std::none_of(match_left_.begin(), match_left_.end(), [](int r) { return r < 0; });
}

}  // namespace trace_turan
