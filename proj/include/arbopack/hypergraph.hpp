#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "arbopack/errors.hpp"
#include "arbopack/limits.hpp"

namespace arbopack {

/// Dense vertex index; canonical order is declaration order. External
/// formats use string names, re-indexed on parse.
using VertexId = int;

/// Directed hyperedge: a nonempty tail set and a single head outside it.
struct Dyperedge {
  std::string id;
  std::vector<VertexId> tail;  // sorted, unique, head excluded
  VertexId head = 0;
  double weight = 0.0;
};

/// Undirected hyperedge: a vertex set of size at least two.
struct Hyperedge {
  std::string id;
  std::vector<VertexId> vertices;  // sorted, unique
  double weight = 0.0;
};

struct MixedHypergraph {
  std::vector<std::string> vertex_names;
  std::vector<Dyperedge> dyperedges;
  std::vector<Hyperedge> hyperedges;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_edges() const {
    return static_cast<int>(dyperedges.size() + hyperedges.size());
  }
};

/// Per-vertex root multiplicity bounds for a packing of `k` arborescences.
struct RootBounds {
  int k = 0;
  std::vector<int> min_roots;  // lower bound per vertex, default 0
  std::vector<int> max_roots;  // upper bound per vertex, default k
};

/// Pairwise-disjoint nonempty vertex sets. A partition additionally covers
/// every vertex. Classes and their members are kept in canonical order.
using Subpartition = std::vector<std::vector<VertexId>>;

/// One arc of the directed extension, tagged with its origin: either an
/// original dyperedge or one orientation out of a hyperedge's bundle.
struct ExtensionArc {
  std::vector<VertexId> tail;  // sorted
  VertexId head = 0;
  bool from_hyperedge = false;
  int source = 0;  // index into dyperedges or hyperedges
};

struct DirectedExtension {
  int num_vertices = 0;
  int num_original = 0;  // arcs[0..num_original) carry the original dyperedges
  std::vector<ExtensionArc> arcs;
  int num_hyperedges = 0;

  /// Bundle membership: hyperedge index for oriented arcs, -1 for originals.
  int bundle_of(int arc) const {
    return arcs[arc].from_hyperedge ? arcs[arc].source : -1;
  }

  /// Index of the arc's image in the underlying hypergraph edge list
  /// (dyperedge images first, then one slot per hyperedge).
  int underlying_index(int arc) const {
    const ExtensionArc& a = arcs[arc];
    return a.from_hyperedge ? num_original + a.source : a.source;
  }
};

/// Plain hypergraph used as the hyperforest matroid ground set.
struct Hypergraph {
  int num_vertices = 0;
  std::vector<std::vector<VertexId>> edges;  // each sorted, size >= 2
};

/// Underlying hypergraph of a mixed hypergraph: one edge per dyperedge
/// (head plus tail), then the hyperedges. Provenance is positional.
struct UnderlyingHypergraph {
  Hypergraph graph;
  int num_from_dyperedges = 0;
};

/// Canonicalizing constructors: sort and deduplicate the vertex sets.
Dyperedge make_dyperedge(std::string id, std::vector<VertexId> tail, VertexId head,
                         double weight = 0.0);
Hyperedge make_hyperedge(std::string id, std::vector<VertexId> vertices,
                         double weight = 0.0);

/// Checks every structural invariant of the instance and returns normally
/// iff all hold. Errors name the offending element.
void validate_instance(const MixedHypergraph& h, const RootBounds& b);

/// Number of dyperedges entering the vertex set: head inside, tail not
/// fully inside.
int in_degree_set(std::span<const Dyperedge> arcs, int num_vertices,
                  std::span<const VertexId> within);

/// Number of hyperedges crossing the vertex set: at least one vertex on
/// each side.
int hyper_degree_set(std::span<const Hyperedge> edges, int num_vertices,
                     std::span<const VertexId> within);

/// |E(P) ∪ A(P)|: edges entering or crossing some class, counted once even
/// when several classes are involved.
int partition_cover_count(const MixedHypergraph& h, const Subpartition& classes);

/// Replaces every hyperedge by its bundle of |e| orientations. Originals
/// come first in input order, then bundles in hyperedge order with heads
/// ascending.
DirectedExtension directed_extension(const MixedHypergraph& h);

UnderlyingHypergraph underlying_hypergraph(const MixedHypergraph& h);

/// Underlying hypergraph recovered from an extension alone: one edge per
/// original arc, one per bundle.
Hypergraph extension_underlying_hypergraph(const DirectedExtension& d);

/// Visits every subpartition of {0,...,n-1} exactly once, the empty one
/// first, in a fixed order (per-element class labels in restricted-growth
/// order, label 0 meaning uncovered).
void for_each_subpartition(int n, const std::function<void(const Subpartition&)>& fn,
                           const Limits& limits = {});

std::vector<Subpartition> enumerate_subpartitions(int n, const Limits& limits = {});

/// Visits every partition of {0,...,n-1}, `{V}` first. For n = 0 visits the
/// empty partition once.
void for_each_partition(int n, const std::function<void(const Subpartition&)>& fn,
                        const Limits& limits = {});

}  // namespace arbopack
