#pragma once

#include <vector>

namespace arbopack {

/// Hopcroft-Karp maximum matching. `adj[l]` lists the right-side neighbours
/// of left vertex l. Returns the matching size; when `match_of_left` is
/// given it receives the matched right vertex per left vertex, or -1.
int max_bipartite_matching(int num_left, int num_right,
                           const std::vector<std::vector<int>>& adj,
                           std::vector<int>* match_of_left = nullptr);

}  // namespace arbopack
