#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperreg/limits.hpp"
#include "hyperreg/vertex_set.hpp"

namespace hyperreg {

/// A finite simple hypergraph: labelled vertices 0..n-1 and an antichain of
/// nonempty edges kept in canonical order (size, then lexicographic).
///
/// The one exception is the void marker produced by contracting a singleton
/// edge {x}: its edge list is exactly {∅} and its independence complex has
/// no faces at all.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validating constructor from labels. Throws Error with DuplicateVertex,
  /// DuplicateEdge, EmptyEdge, UnknownVertex or AntichainViolation.
  static Hypergraph build(std::vector<std::string> vertex_labels,
                          const std::vector<std::vector<std::string>>& edge_lists);

  /// Validating constructor from vertex sets over ids 0..labels.size()-1.
  static Hypergraph from_sets(std::vector<std::string> vertex_labels,
                              std::vector<VertexSet> edges);

  /// Same, with labels x1..xn.
  static Hypergraph from_sets(std::size_t n, std::vector<VertexSet> edges);

  static Hypergraph void_marker(std::vector<std::string> vertex_labels);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  VertexSet vertex_set() const { return VertexSet::first(labels_.size()); }
  std::span<const VertexSet> edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }

  bool is_void() const { return void_marker_; }
  bool is_edgeless() const { return edges_.empty(); }
  /// Every edge has exactly two vertices (edgeless counts as a graph).
  bool is_graph() const;
  bool has_singleton_edge() const;

  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<std::size_t> edge_index(VertexSet e) const;
  /// Throws UnknownVertex.
  VertexId vertex(std::string_view label) const;
  /// Throws UnknownVertex when any label is missing.
  VertexSet vertices_of(std::initializer_list<std::string_view> labels) const;

  /// "{x1,x2}" style rendering.
  std::string format(VertexSet s) const;
  std::vector<std::string> label_list(VertexSet s) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> edges_;
  bool void_marker_ = false;
};

/// Default labels x1..xn.
std::vector<std::string> default_labels(std::size_t n);

/// H \ x: drops x and every edge through it. Remaining ids are renumbered
/// contiguously (labels travel with their vertices).
Hypergraph deletion(const Hypergraph& h, VertexId x);

/// H / x: inclusion-minimal members of {E \ {x}}. A singleton edge {x}
/// produces the void marker.
Hypergraph contraction(const Hypergraph& h, VertexId x);

/// N_H(x \ y) = {E \ {x} : x ∈ E, y ∉ E}, canonically sorted.
std::vector<VertexSet> neighborhood_minus(const Hypergraph& h, VertexId x, VertexId y);

/// x_1 - E_1 - x_2 - ... - x_n - E_n - x_1 with distinct vertices and edges.
struct CycleWitness {
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edges;  // indices into Hypergraph::edges()
  std::size_t length() const { return vertices.size(); }
};

/// Exhaustive Berge-cycle search. Returns the lexicographically least
/// sequence (x_1, E_1, x_2, E_2, ...), which is also the least
/// representative of its rotation/reflection class.
std::optional<CycleWitness> find_cycle(const Hypergraph& h, std::size_t n,
                                       const Limits& limits = {});

/// True when the witness has the incidence pattern of an n-cycle in h.
bool is_cycle(const Hypergraph& h, const CycleWitness& w);

/// Every 3-cycle of h uses only edges of cardinality two.
bool three_cycle_edge_condition(const Hypergraph& h, const Limits& limits = {});

struct UniformityProfile {
  std::optional<int> d;
  bool strong_intersection = false;
};

/// Throws NoEdges for an edgeless hypergraph.
UniformityProfile uniformity_profile(const Hypergraph& h);

struct CoverList {
  std::vector<VertexSet> covers;
  int bigheight = 0;
};

CoverList minimal_vertex_covers(const Hypergraph& h);

bool is_independent(std::span<const VertexSet> edges, VertexSet s);
bool is_vertex_cover(std::span<const VertexSet> edges, VertexSet s);
bool is_minimal_vertex_cover(std::span<const VertexSet> edges, VertexSet s);

/// Maximal subsets of `ground` containing no edge (the facets of the
/// independence complex), canonically sorted. Empty when some edge is ∅.
std::vector<VertexSet> maximal_independent_sets(std::span<const VertexSet> edges,
                                                VertexSet ground);

}  // namespace hyperreg
