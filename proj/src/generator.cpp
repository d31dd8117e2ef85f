#include "arbopack/generator.hpp"

#include <algorithm>
#include <string>

#include "arbopack/rng.hpp"

namespace arbopack {

InstanceData generate_instance(const GenParams& params) {
  if (params.num_vertices < 1) raise(Errc::InvalidArgument, "generator needs >= 1 vertex");
  if (params.num_dyperedges < 0 || params.num_hyperedges < 0 || params.k < 0) {
    raise(Errc::InvalidArgument, "generator counts must be nonnegative");
  }
  if (params.max_tail_size < 1 || params.max_hyperedge_size < 2 || params.max_weight < 1) {
    raise(Errc::InvalidArgument, "generator size knobs out of range");
  }

  Rng rng(params.seed);
  InstanceData data;
  const int n = params.num_vertices;
  for (int v = 0; v < n; ++v) data.graph.vertex_names.push_back("v" + std::to_string(v));

  if (n >= 2) {
    for (int i = 0; i < params.num_dyperedges; ++i) {
      int head = rng.uniform_int(0, n - 1);
      int size = rng.uniform_int(1, std::min(params.max_tail_size, n - 1));
      std::vector<int> picks = rng.sample_distinct(n - 1, size);
      std::vector<VertexId> tail;
      for (int p : picks) tail.push_back(p >= head ? p + 1 : p);  // skip the head slot
      double weight = rng.uniform_int(1, params.max_weight);
      data.graph.dyperedges.push_back(
          make_dyperedge("a" + std::to_string(i), std::move(tail), head, weight));
    }
    for (int i = 0; i < params.num_hyperedges; ++i) {
      int size = rng.uniform_int(2, std::min(params.max_hyperedge_size, n));
      std::vector<VertexId> members = rng.sample_distinct(n, size);
      double weight = rng.uniform_int(1, params.max_weight);
      data.graph.hyperedges.push_back(
          make_hyperedge("e" + std::to_string(i), std::move(members), weight));
    }
  }

  data.bounds.k = params.k;
  data.bounds.min_roots.resize(n);
  data.bounds.max_roots.resize(n);
  for (int v = 0; v < n; ++v) {
    data.bounds.max_roots[v] = rng.uniform_int(0, params.k);
    data.bounds.min_roots[v] = rng.uniform_int(0, data.bounds.max_roots[v]);
  }

  validate_instance(data.graph, data.bounds);
  return data;
}

}  // namespace arbopack
