#include "arbopack/packing.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>

#include "arbopack/hyperforest.hpp"
#include "arbopack/intersection.hpp"
#include "arbopack/matroid.hpp"

namespace arbopack {

const char* certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::InvertedRootBounds: return "inverted_root_bounds";
    case CertificateKind::SubpartitionMinRoots: return "subpartition_min_roots";
    case CertificateKind::SubpartitionMaxRoots: return "subpartition_max_roots";
    case CertificateKind::InDegreeBoundsVertex: return "in_degree_bounds_vertex";
    case CertificateKind::InDegreeBoundsTotal: return "in_degree_bounds_total";
    case CertificateKind::DualSet: return "dual_set";
  }
  return "unknown";
}

const char* packing_violation_name(PackingViolation::Kind kind) {
  switch (kind) {
    case PackingViolation::Kind::UnknownEdge: return "UnknownEdge";
    case PackingViolation::Kind::UnknownVertex: return "UnknownVertex";
    case PackingViolation::Kind::WrongArborescenceCount: return "WrongArborescenceCount";
    case PackingViolation::Kind::WrongEdgeCount: return "WrongEdgeCount";
    case PackingViolation::Kind::DisjointnessViolation: return "DisjointnessViolation";
    case PackingViolation::Kind::RootBoundViolation: return "RootBoundViolation";
    case PackingViolation::Kind::InDegreeViolation: return "InDegreeViolation";
    case PackingViolation::Kind::NotSpanning: return "NotSpanning";
    case PackingViolation::Kind::TrimMismatch: return "TrimMismatch";
    case PackingViolation::Kind::WeightMismatch: return "WeightMismatch";
  }
  return "Unknown";
}

namespace {

std::optional<FeasibilityCertificate> inverted_bounds(const RootBounds& b) {
  for (int v = 0; v < static_cast<int>(b.min_roots.size()); ++v) {
    if (b.min_roots[v] > b.max_roots[v]) {
      FeasibilityCertificate cert;
      cert.kind = CertificateKind::InvertedRootBounds;
      cert.vertex = v;
      cert.lhs = b.min_roots[v];
      cert.rhs = b.max_roots[v];
      return cert;
    }
  }
  return std::nullopt;
}

// In-degree bound screening on the directed extension, in the order:
// aggregate lower bound, per-vertex bounds, aggregate upper bound. A
// violation certifies infeasibility of the packing problem itself.
std::optional<FeasibilityCertificate> root_bound_conditions(const DirectedExtension& d,
                                                            const RootBounds& b) {
  const int n = d.num_vertices;
  const long long target = static_cast<long long>(b.k) * (n - 1);
  std::vector<long long> in_degree(n, 0);
  for (const ExtensionArc& a : d.arcs) ++in_degree[a.head];

  long long lower_sum = 0;
  long long upper_sum = 0;
  for (int v = 0; v < n; ++v) {
    lower_sum += std::max<long long>(b.k - b.max_roots[v], 0);
    upper_sum += std::min<long long>(b.k - b.min_roots[v], in_degree[v]);
  }
  FeasibilityCertificate cert;
  if (lower_sum > target) {
    cert.kind = CertificateKind::InDegreeBoundsTotal;
    cert.lhs = lower_sum;
    cert.rhs = target;
    return cert;
  }
  for (int v = 0; v < n; ++v) {
    long long lo = std::max<long long>(b.k - b.max_roots[v], 0);
    long long hi = std::min<long long>(b.k - b.min_roots[v], in_degree[v]);
    if (lo > hi) {
      cert.kind = CertificateKind::InDegreeBoundsVertex;
      cert.vertex = v;
      cert.lhs = lo;
      cert.rhs = hi;
      return cert;
    }
  }
  if (target > upper_sum) {
    cert.kind = CertificateKind::InDegreeBoundsTotal;
    cert.lhs = target;
    cert.rhs = upper_sum;
    return cert;
  }
  return std::nullopt;
}

long long sum_over(const std::vector<int>& values, const std::vector<bool>& pick,
                   bool picked_side) {
  long long total = 0;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (pick[v] == picked_side) total += values[v];
  }
  return total;
}

}  // namespace

std::optional<FeasibilityCertificate> check_characterization_bruteforce(
    const MixedHypergraph& h, const RootBounds& b, const Limits& limits) {
  validate_instance(h, b);
  if (auto cert = inverted_bounds(b)) return cert;

  const int n = h.num_vertices();
  std::optional<FeasibilityCertificate> found;
  for_each_subpartition(
      n,
      [&](const Subpartition& p) {
        if (found) return;
        std::vector<bool> covered(n, false);
        for (const auto& cls : p) {
          for (VertexId v : cls) covered[v] = true;
        }
        long long cover = partition_cover_count(h, p);
        long long classes = static_cast<long long>(p.size());

        long long demand_min = static_cast<long long>(b.k) * (classes - 1) +
                               sum_over(b.min_roots, covered, false);
        if (cover < demand_min) {
          FeasibilityCertificate cert;
          cert.kind = CertificateKind::SubpartitionMinRoots;
          cert.classes = p;
          cert.lhs = cover;
          cert.rhs = demand_min;
          found = cert;
          return;
        }
        long long demand_max =
            static_cast<long long>(b.k) * classes - sum_over(b.max_roots, covered, true);
        if (cover < demand_max) {
          FeasibilityCertificate cert;
          cert.kind = CertificateKind::SubpartitionMaxRoots;
          cert.classes = p;
          cert.lhs = cover;
          cert.rhs = demand_max;
          found = cert;
        }
      },
      limits);
  return found;
}

std::optional<FeasibilityCertificate> check_feasibility(const MixedHypergraph& h,
                                                        const RootBounds& b,
                                                        const Limits& limits) {
  if (h.num_vertices() <= limits.max_subpartition_vertices) {
    return check_characterization_bruteforce(h, b, limits);
  }
  validate_instance(h, b);
  if (auto cert = inverted_bounds(b)) return cert;
  DirectedExtension d = directed_extension(h);
  if (auto cert = root_bound_conditions(d, b)) return cert;

  GeneralizedPartitionMatroid roots = build_root_bound_matroid(d, b);
  ExtendedHyperforestOracle forests(d, b.k);
  const int target = b.k * (h.num_vertices() - 1);
  IntersectionOptions opts;
  opts.weight_tolerance = 0.0;
  auto outcome = min_weight_common_independent_of_size(forests, roots, {}, target, opts);
  if (auto* infeasible = std::get_if<IntersectionInfeasible>(&outcome)) {
    FeasibilityCertificate cert;
    cert.kind = CertificateKind::DualSet;
    cert.dual_elements = infeasible->dual_certificate;
    cert.lhs = infeasible->achievable_size;
    cert.rhs = target;
    return cert;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cut condition and decomposition
// ---------------------------------------------------------------------------

namespace {

struct ArcMasks {
  std::vector<std::uint64_t> head_bit;
  std::vector<std::uint64_t> tail_mask;
};

ArcMasks build_arc_masks(const DirectedExtension& d) {
  ArcMasks masks;
  masks.head_bit.reserve(d.arcs.size());
  masks.tail_mask.reserve(d.arcs.size());
  for (const ExtensionArc& a : d.arcs) {
    masks.head_bit.push_back(std::uint64_t{1} << a.head);
    std::uint64_t tail = 0;
    for (VertexId v : a.tail) tail |= std::uint64_t{1} << v;
    masks.tail_mask.push_back(tail);
  }
  return masks;
}

// d_Z^-(X) >= |roots outside X| (+1 when the grown tree misses X), for
// every nonempty X. `grown_mask == 0` means no partially grown tree.
bool cut_condition(int n, const ArcMasks& masks, std::span<const int> arc_ids,
                   const std::vector<int>& root_count, long long total_roots,
                   std::uint64_t grown_mask) {
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (std::uint64_t x = 1; x <= full; ++x) {
    long long need = total_roots;
    for (int v = 0; v < n; ++v) {
      if (x & (std::uint64_t{1} << v)) need -= root_count[v];
    }
    if (grown_mask != 0 && (x & grown_mask) == 0) ++need;
    if (need <= 0) continue;
    long long entering = 0;
    for (int id : arc_ids) {
      if ((masks.head_bit[id] & x) != 0 && (masks.tail_mask[id] & ~x) != 0) {
        if (++entering >= need) break;
      }
    }
    if (entering < need) return false;
  }
  return true;
}

void require_subset_limit(int n, const Limits& limits, const char* what) {
  if (n > limits.max_subset_vertices || n > 62) {
    raise(Errc::TooLarge, std::string(what) + " enumerates vertex subsets; " +
                              std::to_string(n) + " vertices exceeds the limit " +
                              std::to_string(std::min(limits.max_subset_vertices, 62)));
  }
}

}  // namespace

bool edmonds_condition(const DirectedExtension& d, std::span<const int> arc_ids,
                       std::span<const VertexId> roots,
                       const std::vector<VertexId>* grown_class, const Limits& limits) {
  const int n = d.num_vertices;
  require_subset_limit(n, limits, "edmonds_condition");
  std::vector<int> root_count(n, 0);
  for (VertexId r : roots) {
    if (r < 0 || r >= n) raise(Errc::UnknownVertex, "root " + std::to_string(r));
    ++root_count[r];
  }
  for (int id : arc_ids) {
    if (id < 0 || id >= static_cast<int>(d.arcs.size())) {
      raise(Errc::UnknownEdge, "arc " + std::to_string(id));
    }
  }
  std::uint64_t grown_mask = 0;
  if (grown_class != nullptr) {
    for (VertexId v : *grown_class) {
      if (v < 0 || v >= n) raise(Errc::UnknownVertex, "vertex " + std::to_string(v));
      grown_mask |= std::uint64_t{1} << v;
    }
    if (grown_mask == 0) {
      raise(Errc::InvalidArgument, "grown class must be nonempty when given");
    }
  }
  return cut_condition(n, build_arc_masks(d), arc_ids, root_count,
                       static_cast<long long>(roots.size()), grown_mask);
}

std::vector<ExtensionArborescence> decompose_to_arborescences(
    const DirectedExtension& d, std::span<const int> arc_ids,
    std::span<const VertexId> roots, const Limits& limits) {
  const int n = d.num_vertices;
  require_subset_limit(n, limits, "decompose_to_arborescences");
  const long long k = static_cast<long long>(roots.size());
  if (static_cast<long long>(arc_ids.size()) != k * (n - 1)) {
    raise(Errc::DecompositionFailed, "arc count " + std::to_string(arc_ids.size()) +
                                         " differs from |roots|*(|V|-1)");
  }

  ArcMasks masks = build_arc_masks(d);
  std::vector<int> remaining(arc_ids.begin(), arc_ids.end());
  std::sort(remaining.begin(), remaining.end());

  std::vector<int> root_count(n, 0);
  for (VertexId r : roots) {
    if (r < 0 || r >= n) raise(Errc::UnknownVertex, "root " + std::to_string(r));
    ++root_count[r];
  }
  long long roots_left = k;
  if (!cut_condition(n, masks, remaining, root_count, roots_left, 0)) {
    raise(Errc::DecompositionFailed, "cut condition fails for the given arcs and roots");
  }

  std::vector<ExtensionArborescence> trees;
  trees.reserve(roots.size());
  for (VertexId root : roots) {
    // This root's tree no longer counts as a demand; the grown-class term
    // takes over until the tree spans every vertex.
    --root_count[root];
    --roots_left;

    ExtensionArborescence tree;
    tree.root = root;
    std::uint64_t tree_mask = std::uint64_t{1} << root;
    int covered = 1;
    while (covered < n) {
      bool committed = false;
      for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
        const int id = remaining[pos];
        if ((masks.head_bit[id] & tree_mask) != 0) continue;
        std::uint64_t reach = masks.tail_mask[id] & tree_mask;
        if (reach == 0) continue;
        std::uint64_t next_mask = tree_mask | masks.head_bit[id];
        std::vector<int> rest = remaining;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        if (!cut_condition(n, masks, rest, root_count, roots_left, next_mask)) continue;

        ExtensionTrimmedArc edge;
        edge.arc = id;
        edge.to = d.arcs[id].head;
        edge.from = std::countr_zero(reach);  // smallest tree vertex in the tail
        tree.edges.push_back(edge);
        tree_mask = next_mask;
        ++covered;
        remaining = std::move(rest);
        committed = true;
#ifndef NDEBUG
        assert(cut_condition(n, masks, remaining, root_count, roots_left, tree_mask));
#endif
        break;
      }
      if (!committed) {
        raise(Errc::DecompositionFailed,
              "no admissible arc while growing the tree rooted at vertex " +
                  std::to_string(root));
      }
    }
    trees.push_back(std::move(tree));
  }
  return trees;
}

Packing map_back(const MixedHypergraph& h, const DirectedExtension& d,
                 std::span<const ExtensionArborescence> packing) {
  std::vector<bool> bundle_used(d.num_hyperedges, false);
  Packing out;
  for (const ExtensionArborescence& tree : packing) {
    Arborescence mapped;
    mapped.root = h.vertex_names[tree.root];
    for (const ExtensionTrimmedArc& edge : tree.edges) {
      const ExtensionArc& arc = d.arcs[edge.arc];
      TrimmedEdge mapped_edge;
      if (arc.from_hyperedge) {
        if (bundle_used[arc.source]) {
          raise(Errc::BundleReused,
                "two orientations of hyperedge '" + h.hyperedges[arc.source].id + "' used",
                h.hyperedges[arc.source].id);
        }
        bundle_used[arc.source] = true;
        mapped_edge.edge_id = h.hyperedges[arc.source].id;
        out.total_weight += h.hyperedges[arc.source].weight;
      } else {
        mapped_edge.edge_id = h.dyperedges[arc.source].id;
        out.total_weight += h.dyperedges[arc.source].weight;
      }
      mapped_edge.from = h.vertex_names[edge.from];
      mapped_edge.to = h.vertex_names[edge.to];
      mapped.edges.push_back(std::move(mapped_edge));
    }
    out.arborescences.push_back(std::move(mapped));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimum-weight solve
// ---------------------------------------------------------------------------

std::variant<Packing, FeasibilityCertificate> solve_min_weight(const MixedHypergraph& h,
                                                               const RootBounds& b,
                                                               const SolveOptions& options) {
  validate_instance(h, b);
  if (auto cert = inverted_bounds(b)) return *cert;

  DirectedExtension d = directed_extension(h);
  if (auto cert = root_bound_conditions(d, b)) return *cert;

  GeneralizedPartitionMatroid root_matroid = build_root_bound_matroid(d, b);
  ExtendedHyperforestOracle forest_matroid(d, b.k);
  const int n = h.num_vertices();
  const int target = b.k * (n - 1);

  // Lifted weights: every orientation of a hyperedge costs the hyperedge.
  std::vector<double> weights(d.arcs.size());
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const ExtensionArc& a = d.arcs[i];
    double w = a.from_hyperedge ? h.hyperedges[a.source].weight : h.dyperedges[a.source].weight;
    weights[i] = options.exact_weights ? static_cast<double>(std::llround(w * 1e6)) : w;
  }

  IntersectionOptions solver_options;
  solver_options.weight_tolerance = options.exact_weights ? 0.0 : 1e-9;
  solver_options.on_augment = options.trace;
  auto outcome = min_weight_common_independent_of_size(forest_matroid, root_matroid, weights,
                                                       target, solver_options);
  if (auto* infeasible = std::get_if<IntersectionInfeasible>(&outcome)) {
    FeasibilityCertificate cert;
    cert.kind = CertificateKind::DualSet;
    cert.dual_elements = std::move(infeasible->dual_certificate);
    cert.lhs = infeasible->achievable_size;
    cert.rhs = target;
    return cert;
  }

  const std::vector<int>& chosen = std::get<WeightedIntersectionResult>(outcome).common_set;
  std::vector<int> in_degree(n, 0);
  for (int id : chosen) ++in_degree[d.arcs[id].head];
  std::vector<VertexId> roots;
  roots.reserve(b.k);
  for (int v = 0; v < n; ++v) {
    for (int copies = b.k - in_degree[v]; copies > 0; --copies) roots.push_back(v);
  }

  std::vector<ExtensionArborescence> trees =
      decompose_to_arborescences(d, chosen, roots, options.limits);
  return map_back(h, d, trees);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

std::vector<PackingViolation> verify_packing(const MixedHypergraph& h, const RootBounds& b,
                                             const Packing& p) {
  std::vector<PackingViolation> out;
  auto report = [&](PackingViolation::Kind kind, std::string subject, std::string message) {
    out.push_back(PackingViolation{kind, std::move(subject), std::move(message)});
  };

  const int n = h.num_vertices();
  std::unordered_map<std::string, VertexId> vertex_of;
  for (int v = 0; v < n; ++v) vertex_of[h.vertex_names[v]] = v;
  struct EdgeRef {
    bool is_hyper;
    int index;
  };
  std::unordered_map<std::string, EdgeRef> edge_of;
  for (int i = 0; i < static_cast<int>(h.dyperedges.size()); ++i) {
    edge_of[h.dyperedges[i].id] = EdgeRef{false, i};
  }
  for (int i = 0; i < static_cast<int>(h.hyperedges.size()); ++i) {
    edge_of[h.hyperedges[i].id] = EdgeRef{true, i};
  }

  if (static_cast<int>(p.arborescences.size()) != b.k) {
    report(PackingViolation::Kind::WrongArborescenceCount, "",
           "packing has " + std::to_string(p.arborescences.size()) + " arborescences, k = " +
               std::to_string(b.k));
  }

  std::unordered_map<std::string, int> usage;
  std::vector<int> root_count(n, 0);
  double used_weight = 0.0;

  for (std::size_t ti = 0; ti < p.arborescences.size(); ++ti) {
    const Arborescence& tree = p.arborescences[ti];
    const std::string where = "arborescence " + std::to_string(ti);

    auto root_it = vertex_of.find(tree.root);
    if (root_it == vertex_of.end()) {
      report(PackingViolation::Kind::UnknownVertex, tree.root,
             where + ": unknown root '" + tree.root + "'");
      continue;
    }
    VertexId root = root_it->second;
    ++root_count[root];

    std::vector<int> in_degree(n, 0);
    std::vector<std::vector<VertexId>> children(n);
    bool structure_ok = true;

    for (const TrimmedEdge& edge : tree.edges) {
      auto edge_it = edge_of.find(edge.edge_id);
      if (edge_it == edge_of.end()) {
        report(PackingViolation::Kind::UnknownEdge, edge.edge_id,
               where + ": edge '" + edge.edge_id + "' not in the instance");
        structure_ok = false;
        continue;
      }
      ++usage[edge.edge_id];
      const EdgeRef ref = edge_it->second;
      used_weight += ref.is_hyper ? h.hyperedges[ref.index].weight
                                  : h.dyperedges[ref.index].weight;

      auto from_it = vertex_of.find(edge.from);
      auto to_it = vertex_of.find(edge.to);
      if (from_it == vertex_of.end() || to_it == vertex_of.end()) {
        report(PackingViolation::Kind::UnknownVertex,
               from_it == vertex_of.end() ? edge.from : edge.to,
               where + ": unknown endpoint on edge '" + edge.edge_id + "'");
        structure_ok = false;
        continue;
      }
      VertexId from = from_it->second;
      VertexId to = to_it->second;

      bool trim_ok;
      if (ref.is_hyper) {
        const auto& vs = h.hyperedges[ref.index].vertices;
        trim_ok = from != to && std::binary_search(vs.begin(), vs.end(), from) &&
                  std::binary_search(vs.begin(), vs.end(), to);
      } else {
        const Dyperedge& a = h.dyperedges[ref.index];
        trim_ok = to == a.head && std::binary_search(a.tail.begin(), a.tail.end(), from);
      }
      if (!trim_ok) {
        report(PackingViolation::Kind::TrimMismatch, edge.edge_id,
               where + ": arc " + edge.from + "->" + edge.to + " is not a trimming of '" +
                   edge.edge_id + "'");
        structure_ok = false;
        continue;
      }
      ++in_degree[to];
      children[from].push_back(to);
    }

    if (static_cast<int>(tree.edges.size()) != n - 1) {
      report(PackingViolation::Kind::WrongEdgeCount, "",
             where + ": " + std::to_string(tree.edges.size()) + " edges, expected " +
                 std::to_string(n - 1));
      structure_ok = false;
    }
    if (!structure_ok) continue;

    for (int v = 0; v < n; ++v) {
      int expected = (v == root) ? 0 : 1;
      if (in_degree[v] != expected) {
        report(PackingViolation::Kind::InDegreeViolation, h.vertex_names[v],
               where + ": vertex '" + h.vertex_names[v] + "' has in-degree " +
                   std::to_string(in_degree[v]) + ", expected " + std::to_string(expected));
      }
    }

    std::vector<bool> reached(n, false);
    std::queue<VertexId> queue;
    reached[root] = true;
    queue.push(root);
    int reach_count = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (VertexId w : children[v]) {
        if (!reached[w]) {
          reached[w] = true;
          ++reach_count;
          queue.push(w);
        }
      }
    }
    if (reach_count != n) {
      report(PackingViolation::Kind::NotSpanning, tree.root,
             where + ": only " + std::to_string(reach_count) + " of " + std::to_string(n) +
                 " vertices reachable from the root");
    }
  }

  for (const auto& [id, count] : usage) {
    if (count > 1) {
      report(PackingViolation::Kind::DisjointnessViolation, id,
             "edge '" + id + "' used " + std::to_string(count) + " times");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (root_count[v] < b.min_roots[v] || root_count[v] > b.max_roots[v]) {
      report(PackingViolation::Kind::RootBoundViolation, h.vertex_names[v],
             "vertex '" + h.vertex_names[v] + "' roots " + std::to_string(root_count[v]) +
                 " arborescences, bounds [" + std::to_string(b.min_roots[v]) + ", " +
                 std::to_string(b.max_roots[v]) + "]");
    }
  }
  if (std::abs(used_weight - p.total_weight) > 1e-6) {
    report(PackingViolation::Kind::WeightMismatch, "",
           "stated total weight " + std::to_string(p.total_weight) +
               " differs from recomputed " + std::to_string(used_weight));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive solve (test oracle)
// ---------------------------------------------------------------------------

namespace {

struct EdgeView {
  std::string id;
  double weight;
  std::vector<std::pair<VertexId, VertexId>> trims;  // candidate arcs, in order
};

// All roots r such that the edge set trims to a spanning r-arborescence,
// with one witness trimming per root.
std::map<VertexId, std::vector<std::pair<VertexId, VertexId>>> arborescence_roots(
    int n, const std::vector<const EdgeView*>& edges) {
  std::map<VertexId, std::vector<std::pair<VertexId, VertexId>>> found;
  if (static_cast<int>(edges.size()) != n - 1) return found;
  if (n == 1) {
    found[0] = {};
    return found;
  }

  std::vector<int> in_degree(n, 0);
  std::vector<std::pair<VertexId, VertexId>> chosen(edges.size());

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == edges.size()) {
      VertexId root = -1;
      for (int v = 0; v < n; ++v) {
        if (in_degree[v] == 0) {
          if (root >= 0) return;  // two sources
          root = v;
        }
      }
      if (root < 0 || found.count(root)) return;
      std::vector<std::vector<VertexId>> children(n);
      for (auto [u, v] : chosen) children[u].push_back(v);
      std::vector<bool> reached(n, false);
      std::queue<VertexId> queue;
      reached[root] = true;
      queue.push(root);
      int count = 1;
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (VertexId w : children[v]) {
          if (!reached[w]) {
            reached[w] = true;
            ++count;
            queue.push(w);
          }
        }
      }
      if (count == n) found[root] = chosen;
      return;
    }
    for (auto [u, v] : edges[i]->trims) {
      if (in_degree[v] > 0) continue;  // at most one entering arc per vertex
      ++in_degree[v];
      chosen[i] = {u, v};
      search(i + 1);
      --in_degree[v];
    }
  };
  search(0);
  return found;
}

}  // namespace

std::optional<Packing> brute_force_solve(const MixedHypergraph& h, const RootBounds& b) {
  validate_instance(h, b);
  const int n = h.num_vertices();
  const int m = h.num_edges();
  if (n > 4 || m > 6 || b.k > 3) {
    raise(Errc::TooLarge, "brute_force_solve handles |V| <= 4, |A|+|E| <= 6, k <= 3");
  }

  std::vector<EdgeView> edges;
  edges.reserve(m);
  for (const Dyperedge& a : h.dyperedges) {
    EdgeView view{a.id, a.weight, {}};
    for (VertexId u : a.tail) view.trims.push_back({u, a.head});
    edges.push_back(std::move(view));
  }
  for (const Hyperedge& e : h.hyperedges) {
    EdgeView view{e.id, e.weight, {}};
    for (VertexId u : e.vertices) {
      for (VertexId v : e.vertices) {
        if (u != v) view.trims.push_back({u, v});
      }
    }
    edges.push_back(std::move(view));
  }

  const int k = b.k;
  std::optional<Packing> best;
  std::vector<int> label(m, 0);  // 0 = unused, 1..k = tree index

  auto consider = [&]() {
    std::vector<std::vector<const EdgeView*>> groups(k);
    std::vector<std::vector<int>> group_ids(k);
    for (int e = 0; e < m; ++e) {
      if (label[e] > 0) {
        groups[label[e] - 1].push_back(&edges[e]);
        group_ids[label[e] - 1].push_back(e);
      }
    }
    for (int t = 0; t < k; ++t) {
      if (static_cast<int>(groups[t].size()) != n - 1) return;
    }

    std::vector<std::map<VertexId, std::vector<std::pair<VertexId, VertexId>>>> options;
    options.reserve(k);
    for (int t = 0; t < k; ++t) {
      options.push_back(arborescence_roots(n, groups[t]));
      if (options.back().empty()) return;
    }

    // Pick one root per tree within the per-vertex bounds.
    std::vector<VertexId> pick(k, -1);
    std::vector<int> root_count(n, 0);
    std::function<bool(int)> choose = [&](int t) {
      if (t == k) {
        for (int v = 0; v < n; ++v) {
          if (root_count[v] < b.min_roots[v] || root_count[v] > b.max_roots[v]) return false;
        }
        return true;
      }
      for (const auto& [root, trims] : options[t]) {
        (void)trims;
        if (root_count[root] >= b.max_roots[root]) continue;
        ++root_count[root];
        pick[t] = root;
        if (choose(t + 1)) return true;
        --root_count[root];
      }
      return false;
    };
    if (!choose(0)) return;

    double weight = 0.0;
    for (int t = 0; t < k; ++t) {
      for (const EdgeView* e : groups[t]) weight += e->weight;
    }
    if (best && weight >= best->total_weight - 1e-12) return;

    Packing packing;
    packing.total_weight = weight;
    for (int t = 0; t < k; ++t) {
      Arborescence tree;
      tree.root = h.vertex_names[pick[t]];
      const auto& trims = options[t].at(pick[t]);
      for (std::size_t i = 0; i < trims.size(); ++i) {
        tree.edges.push_back(TrimmedEdge{groups[t][i]->id, h.vertex_names[trims[i].first],
                                         h.vertex_names[trims[i].second]});
      }
      packing.arborescences.push_back(std::move(tree));
    }
    best = std::move(packing);
  };

  std::function<void(int)> assign = [&](int e) {
    if (e == m) {
      consider();
      return;
    }
    for (int lab = 0; lab <= k; ++lab) {
      label[e] = lab;
      assign(e + 1);
    }
  };
  assign(0);
  return best;
}

}  // namespace arbopack
