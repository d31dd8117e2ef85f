#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "arbopack/hypergraph.hpp"
#include "arbopack/limits.hpp"
#include "arbopack/matroid.hpp"

namespace arbopack {

/// Lorea independence: every nonempty subset of the chosen edges touches
/// strictly more vertices than it has edges. Decided via the per-vertex
/// matching criterion (for each touched vertex v, the edge/vertex incidence
/// graph avoiding v admits a matching saturating the edges), which is
/// equivalent to the subset condition by Hall's theorem.
bool is_hyperforest(const Hypergraph& h, std::span<const int> edge_ids);

/// True iff the full edge set reaches greedy rank |V| - 1 under the
/// hyperforest oracle.
bool is_partition_connected(const Hypergraph& h);

/// Decides whether the chosen edges split into k hyperforests, by matroid
/// union augmentation over a maintained k-colouring.
bool k_hyperforest_is_independent(const Hypergraph& h, std::span<const int> edge_ids, int k);

/// Rank of the k-sum by direct minimisation of
///   e_Z(P) + k(|V| - |P|)
/// over all partitions P of the vertex set.
int k_hyperforest_rank_bruteforce(const Hypergraph& h, std::span<const int> edge_ids, int k,
                                  const Limits& limits = {});

/// Independence in the extended k-hyperforest matroid on the arcs of a
/// directed extension: false as soon as two arcs share a bundle, otherwise
/// the k-sum test on the arcs' underlying edges.
bool extended_is_independent(const DirectedExtension& d, std::span<const int> arc_ids, int k);

/// Rank of the extended matroid by direct minimisation of
///   |Z ∩ A(P)| + |{crossing hyperedges whose bundle Z touches}| + k(|V| - |P|)
/// over all partitions P.
int extended_rank_bruteforce(const DirectedExtension& d, std::span<const int> arc_ids, int k,
                             const Limits& limits = {});

/// Reusable engine for k-sum independence queries over one hypergraph.
/// Results are memoised (base-matroid answers per edge set, colourings per
/// query prefix) when the edge count allows bitmask keys; the mutex keeps
/// concurrent queries safe.
class KSumUnion {
 public:
  KSumUnion(Hypergraph graph, int k);

  bool is_independent(std::span<const int> edge_ids) const;

  const Hypergraph& graph() const { return graph_; }
  int k() const { return k_; }

 private:
  struct PrefixEntry {
    bool ok = false;
    std::vector<std::int8_t> color;
  };

  bool base_independent(const std::vector<int>& edge_ids) const;
  bool base_independent_masked(std::uint64_t mask, const std::vector<int>& edge_ids) const;
  // Tries to recolour so that `candidate` joins some class; updates `color`
  // in place on success.
  bool augment(std::vector<std::int8_t>& color, int candidate) const;

  Hypergraph graph_;
  int k_ = 0;
  bool use_masks_ = false;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, bool> base_memo_;
  mutable std::unordered_map<std::uint64_t, PrefixEntry> prefix_memo_;
};

/// Independence oracle for the extended k-hyperforest matroid, holding one
/// KSumUnion engine so repeated queries share the memo.
class ExtendedHyperforestOracle final : public MatroidOracle {
 public:
  ExtendedHyperforestOracle(const DirectedExtension& d, int k);

  int ground_size() const override { return static_cast<int>(image_.size()); }
  bool is_independent(std::span<const int> elements) const override;

 private:
  std::vector<int> image_;  // arc -> underlying edge slot; bundles share one
  KSumUnion union_;
};

}  // namespace arbopack
