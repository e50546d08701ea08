#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperreg/hypergraph.hpp"
#include "hyperreg/limits.hpp"

namespace hyperreg {

/// Least witness edge (canonical order) E ∋ x with N(y\x) ⊆ N(x\y) for all
/// y ∈ E \ {x}; nullopt when x is not codominated. Throws UnknownVertex.
std::optional<VertexSet> is_codominated(const Hypergraph& h, VertexId x);

/// Shedding vertex of the independence complex. Throws UnknownVertex.
bool is_shedding_vertex(const Hypergraph& h, VertexId x);

/// Every vertex that is shedding in Δ_H, as one set.
VertexSet shedding_vertices(const Hypergraph& h);
VertexSet codominated_vertices(const Hypergraph& h);

struct EliminationOrder {
  std::vector<VertexId> order;  // ids of the input hypergraph
  bool valid = false;
  /// The search had to abandon a branch before succeeding.
  bool backtracked = false;
};

/// Depth-first search over codominated removals down to an edgeless
/// hypergraph, with failures memoised on the remaining edge set.
std::optional<EliminationOrder> is_codismantlable(const Hypergraph& h);

/// Replays removals: each vertex must be codominated at its turn and the
/// final hypergraph edgeless.
bool replay_elimination(const Hypergraph& h, std::span<const VertexId> order);

struct VertexRecord {
  VertexId vertex = 0;
  bool shedding = false;
  bool codominated = false;
  std::optional<VertexSet> codominated_witness;
};

struct VertexClassification {
  std::vector<VertexRecord> records;
  bool c5_free = false;
  bool three_cycle_condition = false;
  bool equivalence_holds = false;

  bool hypotheses_hold() const { return c5_free && three_cycle_condition; }
};

VertexClassification theorem_main_report(const Hypergraph& h, const Limits& limits = {});

namespace detail {
/// Mask-level codominance test: vertex ids are bit positions in `edges`.
std::optional<VertexSet> codominated_witness(std::span<const VertexSet> edges, VertexId x);
}  // namespace detail

}  // namespace hyperreg
