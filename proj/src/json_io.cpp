#include "arbopack/json_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace arbopack {

namespace {

using Json = nlohmann::ordered_json;

void expect_keys(const Json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) raise(Errc::ParseError, where + ": unknown field '" + key + "'");
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) raise(Errc::ParseError, where + ": missing field '" + key + "'");
  return *it;
}

std::string as_string(const Json& value, const std::string& where) {
  if (!value.is_string()) raise(Errc::ParseError, where + ": expected a string");
  return value.get<std::string>();
}

int as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) raise(Errc::ParseError, where + ": expected an integer");
  return value.get<int>();
}

double as_number(const Json& value, const std::string& where) {
  if (!value.is_number()) raise(Errc::ParseError, where + ": expected a number");
  return value.get<double>();
}

class VertexIndex {
 public:
  explicit VertexIndex(const std::vector<std::string>& names) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index_[names[i]] = i;
  }
  VertexId resolve(const std::string& name, const std::string& where) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      raise(Errc::UnknownVertex, where + ": unknown vertex '" + name + "'", name);
    }
    return it->second;
  }

 private:
  std::unordered_map<std::string, VertexId> index_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    raise(Errc::ParseError, err.what());
  }
}

}  // namespace

InstanceData parse_instance_text(const std::string& text) {
  Json doc = parse_json(text);
  if (!doc.is_object()) raise(Errc::ParseError, "instance: expected an object");
  expect_keys(doc, {"vertices", "dyperedges", "hyperedges", "k", "f", "g"}, "instance");

  InstanceData data;
  const Json& vertices = require(doc, "vertices", "instance");
  if (!vertices.is_array()) raise(Errc::ParseError, "vertices: expected an array");
  for (const Json& name : vertices) {
    data.graph.vertex_names.push_back(as_string(name, "vertices"));
  }
  VertexIndex index(data.graph.vertex_names);

  if (auto it = doc.find("dyperedges"); it != doc.end()) {
    if (!it->is_array()) raise(Errc::ParseError, "dyperedges: expected an array");
    for (const Json& entry : *it) {
      if (!entry.is_object()) raise(Errc::ParseError, "dyperedge: expected an object");
      expect_keys(entry, {"id", "tail", "head", "weight"}, "dyperedge");
      std::string id = as_string(require(entry, "id", "dyperedge"), "dyperedge id");
      const std::string where = "dyperedge '" + id + "'";
      const Json& tail = require(entry, "tail", where);
      if (!tail.is_array()) raise(Errc::ParseError, where + ": tail must be an array");
      std::vector<VertexId> tail_ids;
      for (const Json& name : tail) {
        tail_ids.push_back(index.resolve(as_string(name, where), where));
      }
      VertexId head = index.resolve(as_string(require(entry, "head", where), where), where);
      double weight = entry.contains("weight") ? as_number(entry["weight"], where) : 0.0;
      data.graph.dyperedges.push_back(
          make_dyperedge(std::move(id), std::move(tail_ids), head, weight));
    }
  }

  if (auto it = doc.find("hyperedges"); it != doc.end()) {
    if (!it->is_array()) raise(Errc::ParseError, "hyperedges: expected an array");
    for (const Json& entry : *it) {
      if (!entry.is_object()) raise(Errc::ParseError, "hyperedge: expected an object");
      expect_keys(entry, {"id", "vertices", "weight"}, "hyperedge");
      std::string id = as_string(require(entry, "id", "hyperedge"), "hyperedge id");
      const std::string where = "hyperedge '" + id + "'";
      const Json& members = require(entry, "vertices", where);
      if (!members.is_array()) raise(Errc::ParseError, where + ": vertices must be an array");
      std::vector<VertexId> ids;
      for (const Json& name : members) {
        ids.push_back(index.resolve(as_string(name, where), where));
      }
      double weight = entry.contains("weight") ? as_number(entry["weight"], where) : 0.0;
      data.graph.hyperedges.push_back(make_hyperedge(std::move(id), std::move(ids), weight));
    }
  }

  data.bounds.k = as_int(require(doc, "k", "instance"), "k");
  const int n = data.graph.num_vertices();
  data.bounds.min_roots.assign(n, 0);
  data.bounds.max_roots.assign(n, data.bounds.k);
  auto read_bound_map = [&](const char* key, std::vector<int>& target) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_object()) raise(Errc::ParseError, std::string(key) + ": expected an object");
    for (const auto& [name, value] : it->items()) {
      target[index.resolve(name, key)] = as_int(value, std::string(key) + "['" + name + "']");
    }
  };
  read_bound_map("f", data.bounds.min_roots);
  read_bound_map("g", data.bounds.max_roots);

  validate_instance(data.graph, data.bounds);
  return data;
}

InstanceData load_instance_file(const std::string& path) {
  return parse_instance_text(read_file(path));
}

std::string write_instance_text(const InstanceData& instance) {
  const MixedHypergraph& h = instance.graph;
  Json doc;
  doc["vertices"] = h.vertex_names;
  doc["dyperedges"] = Json::array();
  for (const Dyperedge& a : h.dyperedges) {
    Json entry;
    entry["id"] = a.id;
    Json tail = Json::array();
    for (VertexId v : a.tail) tail.push_back(h.vertex_names[v]);
    entry["tail"] = std::move(tail);
    entry["head"] = h.vertex_names[a.head];
    entry["weight"] = a.weight;
    doc["dyperedges"].push_back(std::move(entry));
  }
  doc["hyperedges"] = Json::array();
  for (const Hyperedge& e : h.hyperedges) {
    Json entry;
    entry["id"] = e.id;
    Json members = Json::array();
    for (VertexId v : e.vertices) members.push_back(h.vertex_names[v]);
    entry["vertices"] = std::move(members);
    entry["weight"] = e.weight;
    doc["hyperedges"].push_back(std::move(entry));
  }
  doc["k"] = instance.bounds.k;
  Json f = Json::object();
  Json g = Json::object();
  for (int v = 0; v < h.num_vertices(); ++v) {
    f[h.vertex_names[v]] = instance.bounds.min_roots[v];
    g[h.vertex_names[v]] = instance.bounds.max_roots[v];
  }
  doc["f"] = std::move(f);
  doc["g"] = std::move(g);
  return doc.dump(2) + "\n";
}

Packing parse_packing_text(const std::string& text) {
  Json doc = parse_json(text);
  if (!doc.is_object()) raise(Errc::ParseError, "packing: expected an object");
  expect_keys(doc, {"arborescences", "total_weight"}, "packing");

  Packing packing;
  const Json& trees = require(doc, "arborescences", "packing");
  if (!trees.is_array()) raise(Errc::ParseError, "arborescences: expected an array");
  for (const Json& entry : trees) {
    if (!entry.is_object()) raise(Errc::ParseError, "arborescence: expected an object");
    expect_keys(entry, {"root", "edges"}, "arborescence");
    Arborescence tree;
    tree.root = as_string(require(entry, "root", "arborescence"), "root");
    const Json& edges = require(entry, "edges", "arborescence");
    if (!edges.is_array()) raise(Errc::ParseError, "edges: expected an array");
    for (const Json& edge : edges) {
      if (!edge.is_object()) raise(Errc::ParseError, "edge: expected an object");
      expect_keys(edge, {"id", "from", "to"}, "edge");
      tree.edges.push_back(TrimmedEdge{as_string(require(edge, "id", "edge"), "edge id"),
                                       as_string(require(edge, "from", "edge"), "edge from"),
                                       as_string(require(edge, "to", "edge"), "edge to")});
    }
    packing.arborescences.push_back(std::move(tree));
  }
  packing.total_weight = as_number(require(doc, "total_weight", "packing"), "total_weight");
  return packing;
}

Packing load_packing_file(const std::string& path) {
  return parse_packing_text(read_file(path));
}

std::string write_packing_text(const Packing& packing) {
  Json doc;
  doc["arborescences"] = Json::array();
  for (const Arborescence& tree : packing.arborescences) {
    Json entry;
    entry["root"] = tree.root;
    entry["edges"] = Json::array();
    for (const TrimmedEdge& edge : tree.edges) {
      Json e;
      e["id"] = edge.edge_id;
      e["from"] = edge.from;
      e["to"] = edge.to;
      entry["edges"].push_back(std::move(e));
    }
    doc["arborescences"].push_back(std::move(entry));
  }
  doc["total_weight"] = packing.total_weight;
  return doc.dump(2) + "\n";
}

std::string extension_arc_name(const MixedHypergraph& graph, const DirectedExtension& extension,
                               int arc) {
  const ExtensionArc& a = extension.arcs[arc];
  if (a.from_hyperedge) {
    return graph.hyperedges[a.source].id + "->" + graph.vertex_names[a.head];
  }
  return graph.dyperedges[a.source].id;
}

int parse_extension_arc_name(const MixedHypergraph& graph, const DirectedExtension& extension,
                             const std::string& name) {
  for (int arc = 0; arc < static_cast<int>(extension.arcs.size()); ++arc) {
    if (extension_arc_name(graph, extension, arc) == name) return arc;
  }
  raise(Errc::UnknownEdge, "no extension arc named '" + name + "'", name);
}

std::string write_report_text(const std::string& status,
                              const std::optional<FeasibilityCertificate>& certificate,
                              const MixedHypergraph* graph, const DirectedExtension* extension,
                              double elapsed_ms, const std::string& error_message) {
  Json doc;
  doc["status"] = status;
  if (certificate) {
    Json cert;
    cert["kind"] = certificate_kind_name(certificate->kind);
    if (certificate->vertex >= 0 && graph != nullptr) {
      cert["vertex"] = graph->vertex_names[certificate->vertex];
    }
    switch (certificate->kind) {
      case CertificateKind::SubpartitionMinRoots:
      case CertificateKind::SubpartitionMaxRoots: {
        Json classes = Json::array();
        for (const auto& cls : certificate->classes) {
          Json members = Json::array();
          for (VertexId v : cls) {
            members.push_back(graph != nullptr ? Json(graph->vertex_names[v]) : Json(v));
          }
          classes.push_back(std::move(members));
        }
        cert["classes"] = std::move(classes);
        break;
      }
      case CertificateKind::DualSet: {
        Json elements = Json::array();
        for (int arc : certificate->dual_elements) {
          if (graph != nullptr && extension != nullptr) {
            elements.push_back(extension_arc_name(*graph, *extension, arc));
          } else {
            elements.push_back(arc);
          }
        }
        cert["elements"] = std::move(elements);
        break;
      }
      default:
        break;
    }
    cert["lhs"] = certificate->lhs;
    cert["rhs"] = certificate->rhs;
    doc["certificate"] = std::move(cert);
  }
  if (!error_message.empty()) doc["message"] = error_message;
  doc["timings"] = Json{{"total_ms", elapsed_ms}};
  return doc.dump(2) + "\n";
}

}  // namespace arbopack
