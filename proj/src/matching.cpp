#include "cakecut/matching.hpp"

#include <cstddef>

namespace cakecut {

namespace {

std::size_t right_count(const BipartiteGraph& g) { return g.empty() ? 0 : g.front().size(); }

bool augment(const BipartiteGraph& g, std::size_t c, const std::vector<bool>& left_on, const std::vector<bool>& right_on,
             std::vector<bool>& seen, std::vector<int>& owner) {
  for (std::size_t p = 0; p < g[c].size(); ++p) {
    if (!g[c][p] || !right_on[p] || seen[p]) continue;
    seen[p] = true;
    if (owner[p] < 0 || augment(g, static_cast<std::size_t>(owner[p]), left_on, right_on, seen, owner)) {
      owner[p] = static_cast<int>(c);
      return true;
    }
  }
  return false;
}

int matching_size(const BipartiteGraph& g, const std::vector<bool>& left_on, const std::vector<bool>& right_on) {
  std::vector<int> owner(right_count(g), -1);
  int size = 0;
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (!left_on[c]) continue;
    std::vector<bool> seen(owner.size(), false);
    if (augment(g, c, left_on, right_on, seen, owner)) ++size;
  }
  return size;
}

}  // namespace

int max_matching_size(const BipartiteGraph& accept) {
  return matching_size(accept, std::vector<bool>(accept.size(), true),
                       std::vector<bool>(right_count(accept), true));
}

std::vector<int> lexicographic_max_matching(const BipartiteGraph& accept) {
  const int target = max_matching_size(accept);
  std::vector<int> match(accept.size(), -1);
  std::vector<bool> left_on(accept.size(), true);
  std::vector<bool> right_on(right_count(accept), true);
  int fixed = 0;
  for (std::size_t c = 0; c < accept.size(); ++c) {
    left_on[c] = false;
    for (std::size_t p = 0; p < right_on.size(); ++p) {
      if (!accept[c][p] || !right_on[p]) continue;
      right_on[p] = false;
      if (fixed + 1 + matching_size(accept, left_on, right_on) == target) {
        match[c] = static_cast<int>(p);
        ++fixed;
        break;
      }
      right_on[p] = true;
    }
  }
  return match;
}

AlternatingReach alternating_reach(const BipartiteGraph& accept, const std::vector<int>& match) {
  AlternatingReach r{std::vector<bool>(accept.size(), false), std::vector<bool>(right_count(accept), false)};
  std::vector<int> owner(r.right.size(), -1);
  for (std::size_t c = 0; c < match.size(); ++c) {
    if (match[c] >= 0) owner[match[c]] = static_cast<int>(c);
  }
  std::vector<std::size_t> stack;
  for (std::size_t c = 0; c < accept.size(); ++c) {
    if (match[c] < 0) {
      r.left[c] = true;
      stack.push_back(c);
    }
  }
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t p = 0; p < r.right.size(); ++p) {
      if (!accept[c][p] || r.right[p]) continue;
      r.right[p] = true;
      if (owner[p] >= 0 && !r.left[owner[p]]) {
        r.left[owner[p]] = true;
        stack.push_back(static_cast<std::size_t>(owner[p]));
      }
    }
  }
  return r;
}

}  // namespace cakecut
