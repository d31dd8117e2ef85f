#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arbopack/hypergraph.hpp"
#include "arbopack/limits.hpp"

namespace arbopack {

/// One edge of an arborescence together with the arc it was trimmed to.
/// Vertices and edges are referenced by their external names so packings
/// round-trip through files unchanged.
struct TrimmedEdge {
  std::string edge_id;
  std::string from;
  std::string to;
};

struct Arborescence {
  std::string root;
  std::vector<TrimmedEdge> edges;
};

struct Packing {
  std::vector<Arborescence> arborescences;
  double total_weight = 0.0;
};

enum class CertificateKind {
  InvertedRootBounds,    // min_roots(v) > max_roots(v)
  SubpartitionMinRoots,  // cover(P) < k(|P|-1) + min_roots(V - ∪P)
  SubpartitionMaxRoots,  // cover(P) < k|P| - max_roots(∪P)
  InDegreeBoundsVertex,  // max(k-max_roots(v),0) > min(k-min_roots(v), in-degree(v))
  InDegreeBoundsTotal,   // aggregate in-degree bounds vs k(|V|-1)
  DualSet,               // r1(Z) + r2(S-Z) < k(|V|-1) in the matroid intersection
};

const char* certificate_kind_name(CertificateKind kind);

/// Witness of infeasibility. `lhs`/`rhs` hold the two sides of the violated
/// inequality as evaluated, so re-checking it is a single comparison: the
/// subpartition and dual-set kinds fail lhs >= rhs, the bound kinds fail
/// lhs <= rhs.
struct FeasibilityCertificate {
  CertificateKind kind;
  VertexId vertex = -1;            // the vertex-indexed kinds
  Subpartition classes;            // the subpartition kinds
  std::vector<int> dual_elements;  // DualSet: arc indices into the extension
  long long lhs = 0;
  long long rhs = 0;
};

/// Full characterization at desk scale: root bounds ordered pointwise and
/// both cover inequalities over every subpartition (including the empty
/// one). Returns the first violation in enumeration order, or nothing when
/// the instance is feasible.
std::optional<FeasibilityCertificate> check_characterization_bruteforce(
    const MixedHypergraph& h, const RootBounds& b, const Limits& limits = {});

/// Feasibility with the polynomial-size certificate preference: inverted
/// bounds first, then subpartition certificates when the vertex count is
/// within the enumeration limit, otherwise in-degree bound and rank
/// certificates from the solver.
std::optional<FeasibilityCertificate> check_feasibility(const MixedHypergraph& h,
                                                        const RootBounds& b,
                                                        const Limits& limits = {});

struct SolveOptions {
  /// Compare weights as integers scaled by 1e6 instead of with a tolerance.
  bool exact_weights = false;
  Limits limits;
  /// Forwarded to the intersection solver; called after every augmentation.
  std::function<void(std::span<const int>)> trace;
};

/// Minimum-weight packing pipeline: in-degree bound screening, lifted
/// weights on the directed extension, weighted matroid intersection at size
/// k(|V|-1), then decomposition into arborescences and mapping hyperedge
/// orientations back.
std::variant<Packing, FeasibilityCertificate> solve_min_weight(
    const MixedHypergraph& h, const RootBounds& b, const SolveOptions& options = {});

/// Cut condition for packing spanning arborescences with the given root
/// multiset: every nonempty X receives at least |roots outside X| arcs,
/// plus one more when a partially grown tree (`grown_class`) is disjoint
/// from X. Subset enumeration, capped by the limits.
bool edmonds_condition(const DirectedExtension& d, std::span<const int> arc_ids,
                       std::span<const VertexId> roots,
                       const std::vector<VertexId>* grown_class = nullptr,
                       const Limits& limits = {});

struct ExtensionTrimmedArc {
  int arc = 0;  // index into the extension
  VertexId from = 0;
  VertexId to = 0;
};

struct ExtensionArborescence {
  VertexId root = 0;
  std::vector<ExtensionTrimmedArc> edges;
};

/// Splits a dyperedge set satisfying the cut condition into |roots|
/// spanning arborescences, one per root in order, consuming every arc.
/// Each tree is grown from its root, committing the first arc that keeps
/// the cut condition for everything still to be built.
std::vector<ExtensionArborescence> decompose_to_arborescences(
    const DirectedExtension& d, std::span<const int> arc_ids,
    std::span<const VertexId> roots, const Limits& limits = {});

/// Replaces oriented bundle arcs by their hyperedges (same trimmed arc);
/// original arcs keep their dyperedge. Rejects packings using a bundle
/// twice.
Packing map_back(const MixedHypergraph& h, const DirectedExtension& d,
                 std::span<const ExtensionArborescence> packing);

struct PackingViolation {
  enum class Kind {
    UnknownEdge,
    UnknownVertex,
    WrongArborescenceCount,
    WrongEdgeCount,
    DisjointnessViolation,
    RootBoundViolation,
    InDegreeViolation,
    NotSpanning,
    TrimMismatch,
    WeightMismatch,
  };
  Kind kind;
  std::string subject;
  std::string message;
};

const char* packing_violation_name(PackingViolation::Kind kind);

/// Checks every packing invariant and returns all failures; empty means the
/// packing is valid for the instance and bounds.
std::vector<PackingViolation> verify_packing(const MixedHypergraph& h, const RootBounds& b,
                                             const Packing& p);

/// Exhaustive optimum for tiny instances (the test oracle): assigns every
/// edge to one of the k trees or none, tries every trimming, and keeps the
/// cheapest valid packing. Nothing returned means infeasible.
std::optional<Packing> brute_force_solve(const MixedHypergraph& h, const RootBounds& b);

}  // namespace arbopack
