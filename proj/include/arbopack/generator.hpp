#pragma once

#include <cstdint>

#include "arbopack/json_io.hpp"

namespace arbopack {

/// Knobs for the seeded instance generator. Tail and hyperedge sizes are
/// drawn uniformly from the given ranges (clamped to what the vertex count
/// allows), weights are uniform integers, and the root bounds are drawn
/// with min <= max <= k per vertex.
struct GenParams {
  int num_vertices = 4;
  int num_dyperedges = 3;
  int num_hyperedges = 2;
  int k = 1;
  std::uint64_t seed = 0;
  int max_tail_size = 3;
  int max_hyperedge_size = 4;
  int max_weight = 10;
};

/// Deterministic for a fixed parameter set; the output always passes
/// validate_instance. Edges that cannot exist (hyperedges on one vertex,
/// dyperedges without a possible tail) are dropped.
InstanceData generate_instance(const GenParams& params);

}  // namespace arbopack
