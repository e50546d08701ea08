#include "hyperreg/json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hyperreg/error.hpp"

namespace hyperreg {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& item : j) {
    if (!item.is_string()) malformed(what + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const char* kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::Void: return "void";
    case ComplexKind::EmptyFaceOnly: return "empty";
    case ComplexKind::Ordinary: return "ordinary";
  }
  return "ordinary";
}

Json tree_json(const Hypergraph& h, const VDNode* node) {
  Json j;
  if (node == nullptr) return j;
  switch (node->kind) {
    case VDNode::Kind::Simplex: j["base"] = "simplex"; break;
    case VDNode::Kind::Void: j["base"] = "void"; break;
    case VDNode::Kind::EmptyFace: j["base"] = "empty"; break;
    case VDNode::Kind::Shedding:
      j["shedding_vertex"] = h.label(node->vertex);
      j["deletion"] = tree_json(h, node->deletion.get());
      j["link"] = tree_json(h, node->link.get());
      break;
  }
  return j;
}

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::AllGraphs: return "all_graphs";
    case FamilyKind::RandomHypergraph: return "random_hypergraph";
    case FamilyKind::Named: return "named";
  }
  return "all_graphs";
}

int int_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) malformed(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::uint64_t u64_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    malformed(std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object()) malformed("instance must be a JSON object");
  if (!j.contains("vertices") || !j.contains("edges")) malformed("instance needs 'vertices' and 'edges'");
  std::vector<std::string> vertices = string_list(j["vertices"], "'vertices'");
  const Json& edges = j["edges"];
  if (!edges.is_array()) malformed("'edges' must be an array of arrays");
  std::vector<std::vector<std::string>> lists;
  for (const Json& e : edges) lists.push_back(string_list(e, "each edge"));
  return Hypergraph::build(std::move(vertices), lists);
}

Hypergraph parse_hypergraph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return hypergraph_from_json(j);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

Json labels_json(const Hypergraph& h, VertexSet s) {
  Json out = Json::array();
  for (VertexId v : s) out.push_back(h.label(v));
  return out;
}

Json to_json(const Hypergraph& h) {
  Json j;
  j["vertices"] = Json::array();
  for (const std::string& label : h.labels()) j["vertices"].push_back(label);
  j["edges"] = Json::array();
  for (VertexSet e : h.edges()) j["edges"].push_back(labels_json(h, e));
  if (h.is_void()) j["void"] = true;
  return j;
}

Json to_json(const Hypergraph& h, const SimplicialComplex& d) {
  Json j;
  j["ground_set"] = labels_json(h, d.ground_set());
  j["facets"] = Json::array();
  for (VertexSet f : d.facets()) j["facets"].push_back(labels_json(h, f));
  j["kind"] = kind_name(d.kind());
  return j;
}

Json to_json(const Hypergraph& h, const EdgeFamily& family) {
  Json j = Json::array();
  for (std::size_t i : family.edges) j.push_back(labels_json(h, h.edge(i)));
  return j;
}

Json to_json(const Hypergraph& h, const BouquetSet& b) {
  Json j;
  j["bouquets"] = Json::array();
  for (const Bouquet& bq : b.bouquets) {
    Json item;
    item["stems"] = bq.stems;
    item["roots"] = labels_json(h, bq.roots);
    j["bouquets"].push_back(item);
  }
  return j;
}

BouquetSet bouquet_set_from_json(const Hypergraph& h, const Json& j) {
  if (!j.is_object() || !j.contains("bouquets") || !j["bouquets"].is_array()) {
    malformed("bouquet set needs a 'bouquets' array");
  }
  std::vector<Bouquet> bouquets;
  for (const Json& item : j["bouquets"]) {
    if (!item.is_object() || !item.contains("stems") || !item.contains("roots") || !item["stems"].is_array()) {
      malformed("each bouquet needs 'stems' and 'roots'");
    }
    Bouquet b;
    for (const Json& s : item["stems"]) {
      if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0)) {
        malformed("stems are edge indices");
      }
      b.stems.push_back(s.get<std::size_t>());
    }
    for (const std::string& label : string_list(item["roots"], "'roots'")) b.roots.insert(h.vertex(label));
    bouquets.push_back(std::move(b));
  }
  return classify_bouquet_set(h, std::move(bouquets));
}

Json to_json(const BettiTable& t) {
  Json j;
  j["field"] = t.field.name();
  j["entries"] = Json::array();
  for (const auto& [ij, rank] : t.entries) j["entries"].push_back(Json::array({ij.first, ij.second, rank}));
  j["reg"] = t.reg();
  j["pd"] = t.pd();
  return j;
}

Json to_json(const Hypergraph& h, const VDCertificate& cert) {
  Json j;
  j["verdict"] = cert.verdict;
  if (cert.verdict) {
    j["tree"] = tree_json(h, cert.tree.get());
  } else if (cert.failure_witness) {
    j["failure_witness"] = to_json(h, *cert.failure_witness);
  }
  return j;
}

Json to_json(const FamilySpec& spec) {
  Json j;
  j["kind"] = family_kind_name(spec.kind);
  switch (spec.kind) {
    case FamilyKind::AllGraphs:
      j["n"] = spec.n;
      if (spec.n_min != 0) j["n_min"] = spec.n_min;
      if (spec.dedup) j["dedup"] = true;
      break;
    case FamilyKind::RandomHypergraph:
      j["n"] = spec.n;
      if (spec.n_min != 0) j["n_min"] = spec.n_min;
      j["min_edge_size"] = spec.min_edge_size;
      j["max_edge_size"] = spec.max_edge_size;
      if (spec.edge_count) j["edge_count"] = *spec.edge_count;
      if (spec.edge_count_max) j["edge_count_max"] = *spec.edge_count_max;
      if (spec.probability) j["probability"] = *spec.probability;
      j["count"] = spec.count;
      j["seed"] = spec.seed;
      break;
    case FamilyKind::Named:
      j["names"] = spec.names;
      break;
  }
  j["filters"] = spec.filters;
  return j;
}

FamilySpec family_from_json(const Json& j) {
  if (!j.is_object()) malformed("family spec must be a JSON object");
  static const std::set<std::string> known = {"kind", "n", "n_min", "min_edge_size", "max_edge_size",
                                              "edge_count", "edge_count_max", "probability", "count",
                                              "seed", "names", "filters", "dedup"};
  for (const auto& item : j.items()) {
    if (known.count(item.key()) == 0) malformed("unknown family key '" + item.key() + "'");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) malformed("family spec needs a 'kind'");
  FamilySpec s;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "all_graphs") {
    s.kind = FamilyKind::AllGraphs;
  } else if (kind == "random_hypergraph") {
    s.kind = FamilyKind::RandomHypergraph;
  } else if (kind == "named") {
    s.kind = FamilyKind::Named;
  } else {
    malformed("unknown family kind '" + kind + "'");
  }
  if (j.contains("n")) s.n = int_field(j, "n");
  if (j.contains("n_min")) s.n_min = int_field(j, "n_min");
  if (j.contains("min_edge_size")) s.min_edge_size = int_field(j, "min_edge_size");
  if (j.contains("max_edge_size")) s.max_edge_size = int_field(j, "max_edge_size");
  if (j.contains("edge_count")) s.edge_count = int_field(j, "edge_count");
  if (j.contains("edge_count_max")) s.edge_count_max = int_field(j, "edge_count_max");
  if (j.contains("probability")) {
    if (!j["probability"].is_number()) malformed("'probability' must be a number");
    s.probability = j["probability"].get<double>();
  }
  if (j.contains("count")) s.count = u64_field(j, "count");
  if (j.contains("seed")) s.seed = u64_field(j, "seed");
  if (j.contains("names")) s.names = string_list(j["names"], "'names'");
  if (j.contains("filters")) s.filters = string_list(j["filters"], "'filters'");
  if (j.contains("dedup")) {
    if (!j["dedup"].is_boolean()) malformed("'dedup' must be a boolean");
    s.dedup = j["dedup"].get<bool>();
  }
  if (s.kind == FamilyKind::Named && s.names.empty()) malformed("named family needs 'names'");
  validate_family(s);
  return s;
}

FamilySpec parse_family(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid family JSON: ") + e.what());
  }
  return family_from_json(j);
}

}  // namespace hyperreg
