#pragma once

#include <vector>

namespace cakecut {

/// accept[c][p]: left vertex c may be matched with right vertex p.
using BipartiteGraph = std::vector<std::vector<bool>>;

/// Size of a maximum matching (augmenting paths).
int max_matching_size(const BipartiteGraph& accept);

/// Among all maximum matchings, the lexicographically smallest when read as
/// (left index, right index) pairs in left order. match[c] is -1 when c stays unmatched.
std::vector<int> lexicographic_max_matching(const BipartiteGraph& accept);

/// Left vertices reachable from unmatched left vertices along alternating paths,
/// and the right vertices those paths touch.
struct AlternatingReach {
  std::vector<bool> left;
  std::vector<bool> right;
};

AlternatingReach alternating_reach(const BipartiteGraph& accept, const std::vector<int>& match);

}  // namespace cakecut
