#include "arbopack/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace arbopack {

namespace {

void check_vertex_range(VertexId v, int num_vertices, const std::string& context) {
  if (v < 0 || v >= num_vertices) {
    raise(Errc::UnknownVertex, context + ": vertex index " + std::to_string(v) +
                                   " out of range", std::to_string(v));
  }
}

std::vector<bool> membership_mask(int num_vertices, std::span<const VertexId> within,
                                  const std::string& context) {
  std::vector<bool> mask(num_vertices, false);
  for (VertexId v : within) {
    check_vertex_range(v, num_vertices, context);
    mask[v] = true;
  }
  return mask;
}

bool is_canonical_set(const std::vector<VertexId>& vs) {
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i - 1] >= vs[i]) return false;
  }
  return true;
}

bool enters(const Dyperedge& a, const std::vector<bool>& mask) {
  if (!mask[a.head]) return false;
  for (VertexId v : a.tail) {
    if (!mask[v]) return true;
  }
  return false;
}

bool crosses(const Hyperedge& e, const std::vector<bool>& mask) {
  bool inside = false;
  bool outside = false;
  for (VertexId v : e.vertices) {
    (mask[v] ? inside : outside) = true;
    if (inside && outside) return true;
  }
  return false;
}

}  // namespace

Dyperedge make_dyperedge(std::string id, std::vector<VertexId> tail, VertexId head,
                         double weight) {
  std::sort(tail.begin(), tail.end());
  tail.erase(std::unique(tail.begin(), tail.end()), tail.end());
  return Dyperedge{std::move(id), std::move(tail), head, weight};
}

Hyperedge make_hyperedge(std::string id, std::vector<VertexId> vertices, double weight) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Hyperedge{std::move(id), std::move(vertices), weight};
}

void validate_instance(const MixedHypergraph& h, const RootBounds& b) {
  const int n = h.num_vertices();
  if (n == 0) raise(Errc::InvalidArgument, "instance has no vertices");

  std::unordered_set<std::string> names(h.vertex_names.begin(), h.vertex_names.end());
  if (static_cast<int>(names.size()) != n) {
    raise(Errc::InvalidArgument, "duplicate vertex name");
  }

  std::unordered_set<std::string> edge_ids;
  auto check_id = [&](const std::string& id) {
    if (!edge_ids.insert(id).second) {
      raise(Errc::DuplicateEdgeId, "edge id '" + id + "' appears more than once", id);
    }
  };

  for (const Dyperedge& a : h.dyperedges) {
    check_id(a.id);
    if (a.tail.empty()) raise(Errc::EmptyTail, "dyperedge '" + a.id + "' has empty tail", a.id);
    check_vertex_range(a.head, n, "dyperedge '" + a.id + "'");
    if (!is_canonical_set(a.tail)) {
      raise(Errc::InvalidArgument, "dyperedge '" + a.id + "' tail not sorted/unique", a.id);
    }
    for (VertexId v : a.tail) {
      check_vertex_range(v, n, "dyperedge '" + a.id + "'");
      if (v == a.head) {
        raise(Errc::HeadInTail, "dyperedge '" + a.id + "' head occurs in tail", a.id);
      }
    }
  }

  for (const Hyperedge& e : h.hyperedges) {
    check_id(e.id);
    if (e.vertices.size() < 2) {
      raise(Errc::HyperedgeTooSmall, "hyperedge '" + e.id + "' has fewer than 2 vertices",
            e.id);
    }
    if (!is_canonical_set(e.vertices)) {
      raise(Errc::InvalidArgument, "hyperedge '" + e.id + "' vertex set not sorted/unique",
            e.id);
    }
    for (VertexId v : e.vertices) check_vertex_range(v, n, "hyperedge '" + e.id + "'");
  }

  if (b.k < 0) raise(Errc::NegativeBound, "k is negative");
  if (static_cast<int>(b.min_roots.size()) != n || static_cast<int>(b.max_roots.size()) != n) {
    raise(Errc::InvalidArgument, "root bound vectors must cover every vertex");
  }
  for (int v = 0; v < n; ++v) {
    if (b.min_roots[v] < 0 || b.max_roots[v] < 0) {
      raise(Errc::NegativeBound, "root bound at vertex '" + h.vertex_names[v] + "' is negative",
            h.vertex_names[v]);
    }
  }
}

int in_degree_set(std::span<const Dyperedge> arcs, int num_vertices,
                  std::span<const VertexId> within) {
  std::vector<bool> mask = membership_mask(num_vertices, within, "in_degree_set");
  int count = 0;
  for (const Dyperedge& a : arcs) {
    if (enters(a, mask)) ++count;
  }
  return count;
}

int hyper_degree_set(std::span<const Hyperedge> edges, int num_vertices,
                     std::span<const VertexId> within) {
  std::vector<bool> mask = membership_mask(num_vertices, within, "hyper_degree_set");
  int count = 0;
  for (const Hyperedge& e : edges) {
    if (crosses(e, mask)) ++count;
  }
  return count;
}

int partition_cover_count(const MixedHypergraph& h, const Subpartition& classes) {
  const int n = h.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<bool>> masks;
  masks.reserve(classes.size());
  for (const auto& cls : classes) {
    if (cls.empty()) raise(Errc::InvalidArgument, "subpartition class is empty");
    for (VertexId v : cls) {
      check_vertex_range(v, n, "partition_cover_count");
      if (seen[v]) {
        raise(Errc::OverlappingClasses,
              "vertex '" + h.vertex_names[v] + "' occurs in two classes", h.vertex_names[v]);
      }
      seen[v] = true;
    }
    masks.push_back(membership_mask(n, cls, "partition_cover_count"));
  }

  int count = 0;
  for (const Dyperedge& a : h.dyperedges) {
    for (const auto& mask : masks) {
      if (enters(a, mask)) {
        ++count;
        break;
      }
    }
  }
  for (const Hyperedge& e : h.hyperedges) {
    for (const auto& mask : masks) {
      if (crosses(e, mask)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

DirectedExtension directed_extension(const MixedHypergraph& h) {
  DirectedExtension d;
  d.num_vertices = h.num_vertices();
  d.num_original = static_cast<int>(h.dyperedges.size());
  d.num_hyperedges = static_cast<int>(h.hyperedges.size());
  d.arcs.reserve(h.dyperedges.size());

  for (int i = 0; i < d.num_original; ++i) {
    const Dyperedge& a = h.dyperedges[i];
    d.arcs.push_back(ExtensionArc{a.tail, a.head, false, i});
  }
  for (int e = 0; e < d.num_hyperedges; ++e) {
    const std::vector<VertexId>& vs = h.hyperedges[e].vertices;
    for (VertexId head : vs) {
      std::vector<VertexId> tail;
      tail.reserve(vs.size() - 1);
      for (VertexId v : vs) {
        if (v != head) tail.push_back(v);
      }
      d.arcs.push_back(ExtensionArc{std::move(tail), head, true, e});
    }
  }
  return d;
}

UnderlyingHypergraph underlying_hypergraph(const MixedHypergraph& h) {
  UnderlyingHypergraph u;
  u.graph.num_vertices = h.num_vertices();
  u.num_from_dyperedges = static_cast<int>(h.dyperedges.size());
  for (const Dyperedge& a : h.dyperedges) {
    std::vector<VertexId> vs = a.tail;
    vs.insert(std::lower_bound(vs.begin(), vs.end(), a.head), a.head);
    u.graph.edges.push_back(std::move(vs));
  }
  for (const Hyperedge& e : h.hyperedges) u.graph.edges.push_back(e.vertices);
  return u;
}

Hypergraph extension_underlying_hypergraph(const DirectedExtension& d) {
  Hypergraph g;
  g.num_vertices = d.num_vertices;
  g.edges.resize(d.num_original + d.num_hyperedges);
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    int slot = d.underlying_index(i);
    if (!g.edges[slot].empty()) continue;  // bundle slot already filled
    const ExtensionArc& a = d.arcs[i];
    std::vector<VertexId> vs = a.tail;
    vs.insert(std::lower_bound(vs.begin(), vs.end(), a.head), a.head);
    g.edges[slot] = std::move(vs);
  }
  return g;
}

namespace {

void emit_labelled(const std::vector<int>& label, int num_classes, Subpartition& scratch,
                   const std::function<void(const Subpartition&)>& fn) {
  scratch.assign(num_classes, {});
  for (int i = 0; i < static_cast<int>(label.size()); ++i) {
    if (label[i] > 0) scratch[label[i] - 1].push_back(i);
  }
  fn(scratch);
}

// Restricted-growth labelling: label 0 = uncovered (subpartitions only),
// labels 1..used+1 in first-use order. Uncovered branch first.
void recurse_labels(int i, int n, int used, bool allow_uncovered, std::vector<int>& label,
                    Subpartition& scratch, const std::function<void(const Subpartition&)>& fn) {
  if (i == n) {
    emit_labelled(label, used, scratch, fn);
    return;
  }
  int first = allow_uncovered ? 0 : 1;
  for (int lab = first; lab <= used + 1; ++lab) {
    if (lab == 0) {
      label[i] = 0;
      recurse_labels(i + 1, n, used, allow_uncovered, label, scratch, fn);
    } else {
      label[i] = lab;
      recurse_labels(i + 1, n, std::max(used, lab), allow_uncovered, label, scratch, fn);
    }
  }
}

}  // namespace

void for_each_subpartition(int n, const std::function<void(const Subpartition&)>& fn,
                           const Limits& limits) {
  if (n < 0) raise(Errc::InvalidArgument, "negative vertex count");
  if (n > limits.max_subpartition_vertices) {
    raise(Errc::TooLarge, "subpartition enumeration over " + std::to_string(n) +
                              " vertices exceeds limit " +
                              std::to_string(limits.max_subpartition_vertices));
  }
  std::vector<int> label(n, 0);
  Subpartition scratch;
  recurse_labels(0, n, 0, /*allow_uncovered=*/true, label, scratch, fn);
}

std::vector<Subpartition> enumerate_subpartitions(int n, const Limits& limits) {
  std::vector<Subpartition> out;
  for_each_subpartition(n, [&](const Subpartition& p) { out.push_back(p); }, limits);
  return out;
}

void for_each_partition(int n, const std::function<void(const Subpartition&)>& fn,
                        const Limits& limits) {
  if (n < 0) raise(Errc::InvalidArgument, "negative vertex count");
  if (n > limits.max_subpartition_vertices) {
    raise(Errc::TooLarge, "partition enumeration over " + std::to_string(n) +
                              " vertices exceeds limit " +
                              std::to_string(limits.max_subpartition_vertices));
  }
  std::vector<int> label(n, 0);
  Subpartition scratch;
  recurse_labels(0, n, 0, /*allow_uncovered=*/false, label, scratch, fn);
}

}  // namespace arbopack
