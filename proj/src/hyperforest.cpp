#include "arbopack/hyperforest.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "arbopack/bipartite_matching.hpp"

namespace arbopack {

namespace {

// The matching criterion behind is_hyperforest. Works on any edge-id
// multiset; parallel copies are distinct left vertices.
bool lorea_independent(const Hypergraph& h, std::span<const int> edge_ids) {
  if (edge_ids.empty()) return true;
  const int m = static_cast<int>(edge_ids.size());

  std::vector<int> touched;  // vertices covered by the chosen edges
  {
    std::vector<bool> seen(h.num_vertices, false);
    for (int id : edge_ids) {
      for (VertexId v : h.edges[id]) {
        if (!seen[v]) {
          seen[v] = true;
          touched.push_back(v);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
  }
  if (static_cast<int>(touched.size()) <= m) return false;  // the full set already fails

  std::vector<int> local(h.num_vertices, -1);
  for (int i = 0; i < static_cast<int>(touched.size()); ++i) local[touched[i]] = i;

  // One saturating matching per excluded vertex.
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < static_cast<int>(touched.size()); ++i) {
    int excluded = touched[i];
    for (int e = 0; e < m; ++e) {
      adj[e].clear();
      for (VertexId v : h.edges[edge_ids[e]]) {
        if (v != excluded) adj[e].push_back(local[v]);
      }
    }
    if (max_bipartite_matching(m, static_cast<int>(touched.size()), adj) < m) return false;
  }
  return true;
}

std::vector<int> sorted_unique_ids(std::span<const int> ids, int universe,
                                   const char* context) {
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= universe) {
      raise(Errc::UnknownEdge,
            std::string(context) + ": id " + std::to_string(sorted[i]) + " out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      raise(Errc::InvalidArgument,
            std::string(context) + ": duplicate id " + std::to_string(sorted[i]));
    }
  }
  return sorted;
}

// class_of labelling for one partition callback.
std::vector<int> class_labels(int n, const Subpartition& p) {
  std::vector<int> label(n, -1);
  for (int c = 0; c < static_cast<int>(p.size()); ++c) {
    for (VertexId v : p[c]) label[v] = c;
  }
  return label;
}

}  // namespace

bool is_hyperforest(const Hypergraph& h, std::span<const int> edge_ids) {
  std::vector<int> ids =
      sorted_unique_ids(edge_ids, static_cast<int>(h.edges.size()), "is_hyperforest");
  return lorea_independent(h, ids);
}

bool is_partition_connected(const Hypergraph& h) {
  KSumUnion engine(h, 1);
  std::vector<int> kept;
  for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
    kept.push_back(e);
    if (!engine.is_independent(kept)) kept.pop_back();
  }
  return static_cast<int>(kept.size()) == h.num_vertices - 1;
}

KSumUnion::KSumUnion(Hypergraph graph, int k) : graph_(std::move(graph)), k_(k) {
  use_masks_ = graph_.edges.size() <= 64;
}

bool KSumUnion::base_independent(const std::vector<int>& edge_ids) const {
  return lorea_independent(graph_, edge_ids);
}

bool KSumUnion::base_independent_masked(std::uint64_t mask,
                                        const std::vector<int>& edge_ids) const {
  auto it = base_memo_.find(mask);
  if (it != base_memo_.end()) return it->second;
  bool ok = lorea_independent(graph_, edge_ids);
  base_memo_.emplace(mask, ok);
  return ok;
}

bool KSumUnion::augment(std::vector<std::int8_t>& color, int candidate) const {
  const int m = static_cast<int>(graph_.edges.size());

  // Class contents under the current colouring.
  std::vector<std::vector<int>> classes(k_);
  std::vector<int> active;
  for (int e = 0; e < m; ++e) {
    if (color[e] >= 0) {
      classes[color[e]].push_back(e);
      active.push_back(e);
    }
  }

  auto class_with = [&](int cls, int added, int removed) {
    std::vector<int> out;
    out.reserve(classes[cls].size() + 1);
    std::uint64_t mask = 0;
    for (int e : classes[cls]) {
      if (e == removed) continue;
      out.push_back(e);
      if (use_masks_) mask |= std::uint64_t{1} << e;
    }
    out.push_back(added);
    if (use_masks_) mask |= std::uint64_t{1} << added;
    std::sort(out.begin(), out.end());
    return std::pair(out, mask);
  };
  auto accepts = [&](int cls, int added, int removed) {
    auto [set, mask] = class_with(cls, added, removed);
    return use_masks_ ? base_independent_masked(mask, set) : base_independent(set);
  };

  // BFS over the exchange digraph: edge y reaches z when y may take z's
  // place in z's class; y exits at class j when classes[j] + y stays
  // independent. Shortest paths keep the exchange sequence valid.
  std::vector<int> parent(m, -2);
  std::queue<int> queue;
  parent[candidate] = -1;
  queue.push(candidate);
  while (!queue.empty()) {
    int y = queue.front();
    queue.pop();
    for (int j = 0; j < k_; ++j) {
      if (color[y] == j) continue;
      if (!accepts(j, y, -1)) continue;
      // Unwind: each hop moves the earlier edge into the later edge's class.
      std::vector<int> path;
      for (int cur = y; cur != -1; cur = parent[cur]) path.push_back(cur);
      std::reverse(path.begin(), path.end());
      std::vector<std::int8_t> next_color;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        next_color.push_back(color[path[i + 1]]);
      }
      next_color.push_back(static_cast<std::int8_t>(j));
      for (std::size_t i = 0; i < path.size(); ++i) color[path[i]] = next_color[i];
      return true;
    }
    for (int z : active) {
      if (parent[z] != -2 || color[z] == color[y]) continue;
      if (accepts(color[z], y, z)) {
        parent[z] = y;
        queue.push(z);
      }
    }
  }
  return false;
}

bool KSumUnion::is_independent(std::span<const int> edge_ids) const {
  if (k_ <= 0) return edge_ids.empty();
  std::vector<int> ids =
      sorted_unique_ids(edge_ids, static_cast<int>(graph_.edges.size()), "k-sum query");
  if (static_cast<long long>(ids.size()) >
      static_cast<long long>(k_) * std::max(graph_.num_vertices - 1, 0)) {
    return false;
  }

  std::lock_guard<std::mutex> lock(mutex_);

  std::vector<std::int8_t> color(graph_.edges.size(), -1);
  std::size_t start = 0;

  if (use_masks_) {
    // Resume from the longest memoised prefix of the sorted query. Any valid
    // colouring of a prefix extends like any other, so cached ones are safe
    // starting points.
    std::vector<std::uint64_t> prefix_mask(ids.size() + 1, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      prefix_mask[i + 1] = prefix_mask[i] | (std::uint64_t{1} << ids[i]);
    }
    for (std::size_t t = ids.size(); t > 0; --t) {
      auto it = prefix_memo_.find(prefix_mask[t]);
      if (it == prefix_memo_.end()) continue;
      if (!it->second.ok) return false;
      color = it->second.color;
      start = t;
      break;
    }
    for (std::size_t i = start; i < ids.size(); ++i) {
      if (!augment(color, ids[i])) {
        prefix_memo_[prefix_mask[i + 1]] = PrefixEntry{false, {}};
        return false;
      }
      prefix_memo_[prefix_mask[i + 1]] = PrefixEntry{true, color};
    }
    return true;
  }

  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!augment(color, ids[i])) return false;
  }
  return true;
}

bool k_hyperforest_is_independent(const Hypergraph& h, std::span<const int> edge_ids, int k) {
  return KSumUnion(h, k).is_independent(edge_ids);
}

int k_hyperforest_rank_bruteforce(const Hypergraph& h, std::span<const int> edge_ids, int k,
                                  const Limits& limits) {
  std::vector<int> ids =
      sorted_unique_ids(edge_ids, static_cast<int>(h.edges.size()), "k-sum rank");
  long long best = -1;
  for_each_partition(
      h.num_vertices,
      [&](const Subpartition& p) {
        std::vector<int> label = class_labels(h.num_vertices, p);
        long long crossing = 0;
        for (int id : ids) {
          const auto& vs = h.edges[id];
          int cls = label[vs.front()];
          for (VertexId v : vs) {
            if (label[v] != cls) {
              ++crossing;
              break;
            }
          }
        }
        long long value =
            crossing + static_cast<long long>(k) * (h.num_vertices - static_cast<int>(p.size()));
        if (best < 0 || value < best) best = value;
      },
      limits);
  return static_cast<int>(best);
}

bool extended_is_independent(const DirectedExtension& d, std::span<const int> arc_ids, int k) {
  return ExtendedHyperforestOracle(d, k).is_independent(arc_ids);
}

int extended_rank_bruteforce(const DirectedExtension& d, std::span<const int> arc_ids, int k,
                             const Limits& limits) {
  std::vector<int> ids =
      sorted_unique_ids(arc_ids, static_cast<int>(d.arcs.size()), "extended rank");

  std::vector<int> chosen_originals;           // indices into d.arcs, original part
  std::vector<bool> bundle_touched(d.num_hyperedges, false);
  for (int id : ids) {
    if (d.arcs[id].from_hyperedge) {
      bundle_touched[d.arcs[id].source] = true;
    } else {
      chosen_originals.push_back(id);
    }
  }
  Hypergraph underlying = extension_underlying_hypergraph(d);

  long long best = -1;
  for_each_partition(
      d.num_vertices,
      [&](const Subpartition& p) {
        std::vector<int> label = class_labels(d.num_vertices, p);
        long long value =
            static_cast<long long>(k) * (d.num_vertices - static_cast<int>(p.size()));
        for (int id : chosen_originals) {
          const ExtensionArc& a = d.arcs[id];
          for (VertexId v : a.tail) {
            if (label[v] != label[a.head]) {
              ++value;
              break;
            }
          }
        }
        for (int e = 0; e < d.num_hyperedges; ++e) {
          if (!bundle_touched[e]) continue;
          const auto& vs = underlying.edges[d.num_original + e];
          int cls = label[vs.front()];
          for (VertexId v : vs) {
            if (label[v] != cls) {
              ++value;
              break;
            }
          }
        }
        if (best < 0 || value < best) best = value;
      },
      limits);
  return static_cast<int>(best);
}

ExtendedHyperforestOracle::ExtendedHyperforestOracle(const DirectedExtension& d, int k)
    : union_(extension_underlying_hypergraph(d), k) {
  image_.resize(d.arcs.size());
  for (int arc = 0; arc < static_cast<int>(d.arcs.size()); ++arc) {
    image_[arc] = d.underlying_index(arc);
  }
}

bool ExtendedHyperforestOracle::is_independent(std::span<const int> elements) const {
  std::vector<int> imgs;
  imgs.reserve(elements.size());
  for (int x : elements) {
    if (x < 0 || x >= ground_size()) {
      raise(Errc::UnknownEdge, "extension arc " + std::to_string(x) + " out of range");
    }
    imgs.push_back(image_[x]);
  }
  std::sort(imgs.begin(), imgs.end());
  for (std::size_t i = 1; i < imgs.size(); ++i) {
    if (imgs[i] == imgs[i - 1]) return false;  // two orientations of one bundle
  }
  return union_.is_independent(imgs);
}

}  // namespace arbopack
