#pragma once

#include <optional>
#include <string>

#include "arbopack/hypergraph.hpp"
#include "arbopack/packing.hpp"

namespace arbopack {

struct InstanceData {
  MixedHypergraph graph;
  RootBounds bounds;
};

/// Instance document: vertices, dyperedges (id/tail/head/weight), hyperedges
/// (id/vertices/weight), k, and optional f/g maps defaulting to 0 and k.
/// Unknown fields are rejected. Output key order is fixed, so equal inputs
/// produce byte-identical output.
InstanceData parse_instance_text(const std::string& text);
InstanceData load_instance_file(const std::string& path);
std::string write_instance_text(const InstanceData& instance);

Packing parse_packing_text(const std::string& text);
Packing load_packing_file(const std::string& path);
std::string write_packing_text(const Packing& packing);

/// Check/solve report: status plus a typed certificate when infeasible.
/// `graph`/`extension` supply names for vertices and dual-set elements and
/// may be null when unavailable (e.g. parse failures).
std::string write_report_text(const std::string& status,
                              const std::optional<FeasibilityCertificate>& certificate,
                              const MixedHypergraph* graph, const DirectedExtension* extension,
                              double elapsed_ms, const std::string& error_message = {});

/// External name of an extension arc: the dyperedge id for originals,
/// "<hyperedge id>-><head name>" for bundle members.
std::string extension_arc_name(const MixedHypergraph& graph, const DirectedExtension& extension,
                               int arc);

/// Inverse of extension_arc_name; raises UnknownEdge for unmatched names.
int parse_extension_arc_name(const MixedHypergraph& graph, const DirectedExtension& extension,
                             const std::string& name);

}  // namespace arbopack
