#include "arbopack/bipartite_matching.hpp"

#include <limits>
#include <queue>

namespace arbopack {

namespace {

constexpr int kUnmatched = -1;
constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_left;   // left -> right
  std::vector<int> match_right;  // right -> left
  std::vector<int> layer;

  bool bfs() {
    std::queue<int> queue;
    bool found_free = false;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      if (match_left[u] == kUnmatched) {
        layer[u] = 0;
        queue.push(u);
      } else {
        layer[u] = kInf;
      }
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        int w = match_right[v];
        if (w == kUnmatched) {
          found_free = true;
        } else if (layer[w] == kInf) {
          layer[w] = layer[u] + 1;
          queue.push(w);
        }
      }
    }
    return found_free;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_right[v];
      if (w == kUnmatched || (layer[w] == layer[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    layer[u] = kInf;
    return false;
  }
};

}  // namespace

int max_bipartite_matching(int num_left, int num_right,
                           const std::vector<std::vector<int>>& adj,
                           std::vector<int>* match_of_left) {
  HopcroftKarp hk{adj, std::vector<int>(num_left, kUnmatched),
                  std::vector<int>(num_right, kUnmatched), std::vector<int>(num_left, kInf)};
  int size = 0;
  while (hk.bfs()) {
    for (int u = 0; u < num_left; ++u) {
      if (hk.match_left[u] == kUnmatched && hk.dfs(u)) ++size;
    }
  }
  if (match_of_left != nullptr) *match_of_left = hk.match_left;
  return size;
}

}  // namespace arbopack
