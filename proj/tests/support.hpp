// Shared helpers for the test suites: terse instance builders, independent
// definitional oracles, and seeded random corpora. The definitional oracles
// deliberately re-derive everything from the raw definitions (subset and
// partition enumeration) so they stay independent of the library's
// implementation choices.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbopack/hypergraph.hpp"
#include "arbopack/matroid.hpp"
#include "arbopack/rng.hpp"

namespace testsupport {

using namespace arbopack;

inline std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  return names;
}

inline Dyperedge dy(std::string id, std::vector<int> tail, int head, double w = 0.0) {
  return make_dyperedge(std::move(id), std::move(tail), head, w);
}

inline Hyperedge hy(std::string id, std::vector<int> vertices, double w = 0.0) {
  return make_hyperedge(std::move(id), std::move(vertices), w);
}

inline MixedHypergraph graph_of(int n, std::vector<Dyperedge> dyper = {},
                                std::vector<Hyperedge> hyper = {}) {
  return MixedHypergraph{vertex_names(n), std::move(dyper), std::move(hyper)};
}

inline RootBounds bounds_of(int n, int k, int min_all = 0, int max_all = -1) {
  RootBounds b;
  b.k = k;
  b.min_roots.assign(n, min_all);
  b.max_roots.assign(n, max_all < 0 ? k : max_all);
  return b;
}

inline long long bell_number(int n) {
  // Bell triangle.
  std::vector<std::vector<long long>> rows{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> row{rows.back().back()};
    for (long long x : rows.back()) row.push_back(row.back() + x);
    rows.push_back(std::move(row));
  }
  return rows[n][0];
}

// Lorea independence straight from the definition: every nonempty subset of
// the chosen edges must touch more vertices than it has edges.
inline bool hyperforest_by_definition(const Hypergraph& h, const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> seen(h.num_vertices, false);
    int vertices = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      for (VertexId v : h.edges[ids[i]]) {
        if (!seen[v]) {
          seen[v] = true;
          ++vertices;
        }
      }
    }
    if (vertices <= std::popcount(mask)) return false;
  }
  return true;
}

// Partition-connectivity straight from the definition: every partition P of
// the vertex set is crossed by at least |P|-1 edges.
inline bool partition_connected_by_definition(const Hypergraph& h) {
  bool ok = true;
  for_each_partition(h.num_vertices, [&](const Subpartition& p) {
    if (!ok) return;
    std::vector<int> label(h.num_vertices, -1);
    for (int c = 0; c < static_cast<int>(p.size()); ++c) {
      for (VertexId v : p[c]) label[v] = c;
    }
    int crossing = 0;
    for (const auto& edge : h.edges) {
      int cls = label[edge.front()];
      for (VertexId v : edge) {
        if (label[v] != cls) {
          ++crossing;
          break;
        }
      }
    }
    if (crossing < static_cast<int>(p.size()) - 1) ok = false;
  });
  return ok;
}

inline Hypergraph random_hypergraph(Rng& rng, int max_vertices, int max_edges,
                                    int max_edge_size = 4) {
  Hypergraph h;
  h.num_vertices = rng.uniform_int(2, max_vertices);
  int edges = rng.uniform_int(0, max_edges);
  for (int e = 0; e < edges; ++e) {
    int size = rng.uniform_int(2, std::min(max_edge_size, h.num_vertices));
    h.edges.push_back(rng.sample_distinct(h.num_vertices, size));
  }
  return h;
}

// Random mixed hypergraph: dyperedges with small tails, hyperedges of size
// 2..4, integer weights in [1, max_weight].
inline MixedHypergraph random_mixed(Rng& rng, int max_vertices, int max_edges,
                                    int max_weight = 10) {
  int n = rng.uniform_int(std::min(2, max_vertices), max_vertices);
  MixedHypergraph h = graph_of(n);
  int edges = rng.uniform_int(0, max_edges);
  for (int i = 0; i < edges; ++i) {
    double w = rng.uniform_int(1, max_weight);
    if (n >= 2 && rng.uniform_int(0, 1) == 0) {
      int head = rng.uniform_int(0, n - 1);
      std::vector<int> picks =
          rng.sample_distinct(n - 1, rng.uniform_int(1, std::min(3, n - 1)));
      for (int& p : picks) {
        if (p >= head) ++p;
      }
      h.dyperedges.push_back(dy("a" + std::to_string(i), picks, head, w));
    } else if (n >= 2) {
      auto vs = rng.sample_distinct(n, rng.uniform_int(2, std::min(4, n)));
      h.hyperedges.push_back(hy("e" + std::to_string(i), vs, w));
    }
  }
  return h;
}

// Random generalized partition matroid whose parameters always satisfy the
// existence conditions (lower counters may be negative).
inline GeneralizedPartitionMatroid random_gpm(Rng& rng, int max_ground) {
  int ground = rng.uniform_int(0, max_ground);
  int num_classes = rng.uniform_int(1, std::max(ground, 1));
  std::vector<std::vector<int>> classes(num_classes);
  for (int x = 0; x < ground; ++x) classes[rng.uniform_int(0, num_classes - 1)].push_back(x);

  std::vector<int> lower(num_classes);
  std::vector<int> upper(num_classes);
  long long lo_sum = 0;
  long long hi_sum = 0;
  for (int i = 0; i < num_classes; ++i) {
    int size = static_cast<int>(classes[i].size());
    lower[i] = rng.uniform_int(-2, size);
    upper[i] = rng.uniform_int(std::max(lower[i], 0), size + 2);
    lo_sum += std::max(lower[i], 0);
    hi_sum += std::min(upper[i], size);
  }
  int target = static_cast<int>(lo_sum + rng.uniform_int(0, static_cast<int>(hi_sum - lo_sum)));
  return GeneralizedPartitionMatroid(classes, std::move(lower), std::move(upper), target);
}

inline std::vector<int> mask_to_set(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

inline int brute_max_common(const MatroidOracle& m1, const MatroidOracle& m2) {
  const int n = m1.ground_size();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) <= best) continue;
    std::vector<int> set = mask_to_set(mask);
    if (m1.is_independent(set) && m2.is_independent(set)) best = std::popcount(mask);
  }
  return best;
}

inline std::optional<double> brute_min_weight_common(const MatroidOracle& m1,
                                                     const MatroidOracle& m2,
                                                     const std::vector<double>& w, int size) {
  const int n = m1.ground_size();
  std::optional<double> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != size) continue;
    std::vector<int> set = mask_to_set(mask);
    if (!m1.is_independent(set) || !m2.is_independent(set)) continue;
    double total = 0;
    for (int x : set) total += w[x];
    if (!best || total < *best) best = total;
  }
  return best;
}

}  // namespace testsupport
