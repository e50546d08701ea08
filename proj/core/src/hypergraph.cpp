#include "hyperreg/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "hyperreg/error.hpp"

namespace hyperreg {

namespace {

void check_simple(const Hypergraph& h, const std::vector<VertexSet>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) throw Error(ErrorCode::EmptyEdge, "edge #" + std::to_string(i) + " is empty");
    if (!edges[i].subset_of(h.vertex_set())) {
      throw Error(ErrorCode::UnknownVertex, "edge #" + std::to_string(i) + " uses an id outside the vertex table");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j]) {
        throw Error(ErrorCode::DuplicateEdge, "edge " + h.format(edges[i]) + " appears twice");
      }
      if (edges[i].subset_of(edges[j]) || edges[j].subset_of(edges[i])) {
        throw Error(ErrorCode::AntichainViolation,
                    "edge " + h.format(edges[i]) + " and edge " + h.format(edges[j]) +
                        " are nested");
      }
    }
  }
}

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                std::to_string(labels.size()) + " vertices (at most " +
                    std::to_string(kMaxVertices) + " supported)");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateVertex, "label '" + l + "' repeated");
  }
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

Hypergraph Hypergraph::build(std::vector<std::string> vertex_labels,
                             const std::vector<std::vector<std::string>>& edge_lists) {
  check_labels(vertex_labels);
  std::unordered_map<std::string, VertexId> ids;
  for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
    ids.emplace(vertex_labels[i], static_cast<VertexId>(i));
  }
  std::vector<VertexSet> edges;
  edges.reserve(edge_lists.size());
  for (std::size_t i = 0; i < edge_lists.size(); ++i) {
    if (edge_lists[i].empty()) {
      throw Error(ErrorCode::EmptyEdge, "edge #" + std::to_string(i) + " is empty");
    }
    VertexSet e;
    for (const auto& l : edge_lists[i]) {
      auto it = ids.find(l);
      if (it == ids.end()) {
        throw Error(ErrorCode::UnknownVertex,
                    "edge #" + std::to_string(i) + " names unknown vertex '" + l + "'");
      }
      e.insert(it->second);
    }
    edges.push_back(e);
  }
  return from_sets(std::move(vertex_labels), std::move(edges));
}

Hypergraph Hypergraph::from_sets(std::vector<std::string> vertex_labels,
                                 std::vector<VertexSet> edges) {
  check_labels(vertex_labels);
  Hypergraph h;
  h.labels_ = std::move(vertex_labels);
  check_simple(h, edges);
  std::sort(edges.begin(), edges.end(), CanonicalLess{});
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::from_sets(std::size_t n, std::vector<VertexSet> edges) {
  return from_sets(default_labels(n), std::move(edges));
}

Hypergraph Hypergraph::void_marker(std::vector<std::string> vertex_labels) {
  check_labels(vertex_labels);
  Hypergraph h;
  h.labels_ = std::move(vertex_labels);
  h.edges_ = {VertexSet{}};
  h.void_marker_ = true;
  return h;
}

bool Hypergraph::is_graph() const {
  return !void_marker_ &&
         std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 2; });
}

bool Hypergraph::has_singleton_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 1; });
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

std::optional<std::size_t> Hypergraph::edge_index(VertexSet e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, CanonicalLess{});
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexId Hypergraph::vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw Error(ErrorCode::UnknownVertex, "no vertex labelled '" + std::string(label) + "'");
  return *v;
}

VertexSet Hypergraph::vertices_of(std::initializer_list<std::string_view> labels) const {
  VertexSet s;
  for (auto l : labels) s.insert(vertex(l));
  return s;
}

std::string Hypergraph::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ",";
    first = false;
    out += v < labels_.size() ? labels_[v] : "#" + std::to_string(v);
  }
  return out + "}";
}

std::vector<std::string> Hypergraph::label_list(VertexSet s) const {
  std::vector<std::string> out;
  for (VertexId v : s) out.push_back(labels_.at(v));
  return out;
}

Hypergraph deletion(const Hypergraph& h, VertexId x) {
  if (x >= h.num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(x));
  std::vector<std::string> labels(h.labels().begin(), h.labels().end());
  labels.erase(labels.begin() + x);
  if (h.is_void()) return Hypergraph::void_marker(std::move(labels));
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    if (!e.contains(x)) edges.push_back(remove_index(e, x));
  }
  return Hypergraph::from_sets(std::move(labels), std::move(edges));
}

Hypergraph contraction(const Hypergraph& h, VertexId x) {
  if (x >= h.num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(x));
  std::vector<std::string> labels(h.labels().begin(), h.labels().end());
  labels.erase(labels.begin() + x);
  std::vector<VertexSet> shrunk;
  shrunk.reserve(h.num_edges());
  for (VertexSet e : h.edges()) {
    const VertexSet rest = e.without(x);
    if (rest.empty()) return Hypergraph::void_marker(std::move(labels));
    shrunk.push_back(remove_index(rest, x));
  }
  return Hypergraph::from_sets(std::move(labels), minimal_elements(std::move(shrunk)));
}

std::vector<VertexSet> neighborhood_minus(const Hypergraph& h, VertexId x, VertexId y) {
  if (x >= h.num_vertices() || y >= h.num_vertices()) {
    throw Error(ErrorCode::UnknownVertex, "vertex id out of range");
  }
  if (x == y) throw Error(ErrorCode::SameVertex, "N(x\\y) needs two distinct vertices");
  std::vector<VertexSet> out;
  for (VertexSet e : h.edges()) {
    if (e.contains(x) && !e.contains(y)) out.push_back(e.without(x));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

/// Backtracking over (x_1, E_1, ..., x_n, E_n) in lexicographic order with
/// x_1 the least vertex of the cycle.
class CycleSearch {
 public:
  using Accept = std::function<bool(const CycleWitness&)>;

  CycleSearch(const Hypergraph& h, std::size_t n, Accept accept)
      : h_(h), n_(n), accept_(std::move(accept)), incident_(h.num_vertices()) {
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      for (VertexId v : h.edge(i)) incident_[v].push_back(i);
    }
  }

  std::optional<CycleWitness> run() {
    for (VertexId x1 = 0; x1 < h_.num_vertices(); ++x1) {
      w_.vertices = {x1};
      w_.edges.clear();
      used_vertices_ = VertexSet::singleton(x1);
      used_edges_.assign(h_.num_edges(), false);
      if (extend()) return w_;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const VertexId current = w_.vertices.back();
    const VertexId start = w_.vertices.front();
    const bool closing = w_.vertices.size() == n_;
    for (std::size_t ei : incident_[current]) {
      if (used_edges_[ei]) continue;
      const VertexSet e = h_.edge(ei);
      if (closing) {
        if (!e.contains(start)) continue;
        w_.edges.push_back(ei);
        if (accept_(w_)) return true;
        w_.edges.pop_back();
        continue;
      }
      used_edges_[ei] = true;
      w_.edges.push_back(ei);
      for (VertexId next : e) {
        if (next <= start || used_vertices_.contains(next)) continue;
        w_.vertices.push_back(next);
        used_vertices_.insert(next);
        if (extend()) return true;
        used_vertices_.erase(next);
        w_.vertices.pop_back();
      }
      w_.edges.pop_back();
      used_edges_[ei] = false;
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t n_;
  Accept accept_;
  std::vector<std::vector<std::size_t>> incident_;
  CycleWitness w_;
  VertexSet used_vertices_;
  std::vector<bool> used_edges_;
};

void check_cycle_caps(const Hypergraph& h, std::size_t n, const Limits& limits) {
  if (n < 2) throw Error(ErrorCode::MalformedInput, "cycle length must be at least 2");
  if (n > limits.cycle_length_cap) {
    throw Error(ErrorCode::SearchLimitExceeded,
                "cycle length " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits.cycle_length_cap));
  }
  if (h.num_edges() > limits.cycle_edge_cap) {
    throw Error(ErrorCode::SearchLimitExceeded,
                std::to_string(h.num_edges()) + " edges exceed the cycle-search cap " +
                    std::to_string(limits.cycle_edge_cap));
  }
}

}  // namespace

std::optional<CycleWitness> find_cycle(const Hypergraph& h, std::size_t n, const Limits& limits) {
  check_cycle_caps(h, n, limits);
  if (h.is_void()) return std::nullopt;
  return CycleSearch(h, n, [](const CycleWitness&) { return true; }).run();
}

bool is_cycle(const Hypergraph& h, const CycleWitness& w) {
  const std::size_t n = w.vertices.size();
  if (n < 2 || w.edges.size() != n) return false;
  std::vector<VertexId> vs = w.vertices;
  std::vector<std::size_t> es = w.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.edges[i] >= h.num_edges() || w.vertices[i] >= h.num_vertices()) return false;
    const VertexSet e = h.edge(w.edges[i]);
    if (!e.contains(w.vertices[i]) || !e.contains(w.vertices[(i + 1) % n])) return false;
  }
  return true;
}

bool three_cycle_edge_condition(const Hypergraph& h, const Limits& limits) {
  check_cycle_caps(h, 3, limits);
  if (h.is_void()) return true;
  auto has_wide_edge = [&h](const CycleWitness& w) {
    return std::any_of(w.edges.begin(), w.edges.end(),
                       [&h](std::size_t ei) { return h.edge(ei).size() != 2; });
  };
  return !CycleSearch(h, 3, has_wide_edge).run().has_value();
}

UniformityProfile uniformity_profile(const Hypergraph& h) {
  if (h.is_edgeless() || h.is_void()) {
    throw Error(ErrorCode::NoEdges, "uniformity profile needs at least one edge");
  }
  UniformityProfile p;
  const int d = h.edge(0).size();
  for (VertexSet e : h.edges()) {
    if (e.size() != d) return p;
  }
  p.d = d;
  p.strong_intersection = true;
  for (std::size_t i = 0; i < h.num_edges() && p.strong_intersection; ++i) {
    for (std::size_t j = i + 1; j < h.num_edges(); ++j) {
      const int common = (h.edge(i) & h.edge(j)).size();
      if (common != 0 && common != d - 1) {
        p.strong_intersection = false;
        break;
      }
    }
  }
  return p;
}

bool is_independent(std::span<const VertexSet> edges, VertexSet s) {
  return std::none_of(edges.begin(), edges.end(), [s](VertexSet e) { return e.subset_of(s); });
}

bool is_vertex_cover(std::span<const VertexSet> edges, VertexSet s) {
  return std::all_of(edges.begin(), edges.end(), [s](VertexSet e) { return e.intersects(s); });
}

bool is_minimal_vertex_cover(std::span<const VertexSet> edges, VertexSet s) {
  if (!is_vertex_cover(edges, s)) return false;
  for (VertexId v : s) {
    if (is_vertex_cover(edges, s.without(v))) return false;
  }
  return true;
}

namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(std::span<const VertexSet> edges, VertexSet ground)
      : ground_(ground), order_(ground.to_vector()), incident_(kMaxVertices) {
    for (VertexSet e : edges) {
      if (!e.subset_of(ground)) continue;
      for (VertexId v : e) incident_[v].push_back(e);
    }
  }

  std::vector<VertexSet> run() {
    dfs(0, VertexSet{});
    std::sort(out_.begin(), out_.end(), CanonicalLess{});
    return std::move(out_);
  }

 private:
  bool completes_edge(VertexId v, VertexSet s) const {
    const auto& inc = incident_[v];
    return std::any_of(inc.begin(), inc.end(), [v, s](VertexSet e) { return e.without(v).subset_of(s); });
  }

  void dfs(std::size_t i, VertexSet s) {
    if (i == order_.size()) {
      for (VertexId v : ground_ - s) {
        if (!completes_edge(v, s)) return;
      }
      out_.push_back(s);
      return;
    }
    const VertexId v = order_[i];
    if (!completes_edge(v, s)) dfs(i + 1, s.with(v));
    // An excluded vertex must eventually be blocked by an edge.
    VertexSet reachable = s;
    for (std::size_t j = i + 1; j < order_.size(); ++j) reachable.insert(order_[j]);
    if (completes_edge(v, reachable)) dfs(i + 1, s);
  }

  VertexSet ground_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexSet>> incident_;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> maximal_independent_sets(std::span<const VertexSet> edges, VertexSet ground) {
  if (std::any_of(edges.begin(), edges.end(), [](VertexSet e) { return e.empty(); })) return {};
  return IndependentSetSearch(edges, ground).run();
}

CoverList minimal_vertex_covers(const Hypergraph& h) {
  CoverList list;
  for (VertexSet facet : maximal_independent_sets(h.edges(), h.vertex_set())) {
    list.covers.push_back(h.vertex_set() - facet);
  }
  std::sort(list.covers.begin(), list.covers.end(), CanonicalLess{});
  for (VertexSet c : list.covers) list.bigheight = std::max(list.bigheight, c.size());
  return list;
}

}  // namespace hyperreg
