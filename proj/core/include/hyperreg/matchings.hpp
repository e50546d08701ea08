#pragma once

#include <span>
#include <vector>

#include "hyperreg/hypergraph.hpp"
#include "hyperreg/limits.hpp"

namespace hyperreg {

struct FamilyFlags {
  bool matching = false;      // pairwise disjoint
  bool semi_induced = false;  // the only edges inside the union are the members
  bool induced = false;       // both
};

/// A set of distinct edges of one hypergraph with its weight |∪E| − k.
struct EdgeFamily {
  std::vector<std::size_t> edges;  // ascending indices into Hypergraph::edges()
  VertexSet support;
  int weight = 0;
  FamilyFlags flags;
};

/// Throws UnknownEdge for an out-of-range or repeated index.
EdgeFamily classify_family(const Hypergraph& h, std::vector<std::size_t> edge_indices);
/// Throws UnknownEdge when a set is not an edge of h.
EdgeFamily classify_family(const Hypergraph& h, std::span<const VertexSet> edges);

/// Tie-break among optimal families.
enum class WitnessOrder {
  LexLeast,     // lexicographically least index list
  FewestEdges,  // fewest members, then lexicographically least
};

/// c_H (induced), c'_H (semi-induced) and m_H (matching) with one optimal
/// witness each.
struct MatchingInvariants {
  int c = 0;
  int c_prime = 0;
  int m = 0;
  EdgeFamily induced_witness;
  EdgeFamily semi_induced_witness;
  EdgeFamily matching_witness;
};

/// Exact branch-and-bound over edge subsets. Throws SearchLimitExceeded
/// above Limits::matching_edge_cap edges.
MatchingInvariants matching_invariants(const Hypergraph& h, const Limits& limits = {});

EdgeFamily best_induced_matching(const Hypergraph& h, const Limits& limits = {});
EdgeFamily best_semi_induced_matching(const Hypergraph& h, const Limits& limits = {},
                                      WitnessOrder order = WitnessOrder::LexLeast);
EdgeFamily best_matching(const Hypergraph& h, const Limits& limits = {});

/// Every edge loses some vertex and then fits inside a member of `collage`.
/// Throws UnknownEdge.
bool is_two_collage(const Hypergraph& h, std::span<const std::size_t> collage);

/// All inclusion-maximal matchings, each as ascending edge indices.
std::vector<std::vector<std::size_t>> maximal_matchings(const Hypergraph& h,
                                                        const Limits& limits = {});

/// Greedy transversal of a semi-induced family: walk the members in order,
/// pick the least vertex of any member not yet hit, and return the union
/// minus the picks. The result is independent with at least `weight`
/// vertices. Throws NotSemiInduced.
VertexSet independent_set_from_semi_induced(const Hypergraph& h, const EdgeFamily& family);

}  // namespace hyperreg
