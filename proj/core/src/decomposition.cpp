#include "hyperreg/decomposition.hpp"

#include <algorithm>
#include <set>

#include "hyperreg/complex.hpp"
#include "hyperreg/error.hpp"

namespace hyperreg {

namespace detail {

std::optional<VertexSet> codominated_witness(std::span<const VertexSet> edges, VertexId x) {
  auto is_edge = [edges](VertexSet s) {
    return std::find(edges.begin(), edges.end(), s) != edges.end();
  };
  for (VertexSet e : edges) {
    if (!e.contains(x)) continue;
    bool dominated = true;
    for (VertexId y : e.without(x)) {
      // Each member E' \ {y} of N(y\x) needs (E' \ {y}) ∪ {x} to be an edge.
      for (VertexSet f : edges) {
        if (!f.contains(y) || f.contains(x)) continue;
        if (!is_edge(f.without(y).with(x))) {
          dominated = false;
          break;
        }
      }
      if (!dominated) break;
    }
    if (dominated) return e;
  }
  return std::nullopt;
}

}  // namespace detail

std::optional<VertexSet> is_codominated(const Hypergraph& h, VertexId x) {
  if (x >= h.num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(x));
  return detail::codominated_witness(h.edges(), x);
}

bool is_shedding_vertex(const Hypergraph& h, VertexId x) {
  if (x >= h.num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(x));
  return is_shedding(independence_complex(h), x);
}

VertexSet shedding_vertices(const Hypergraph& h) {
  const SimplicialComplex delta = independence_complex(h);
  VertexSet out;
  for (VertexId v : h.vertex_set()) {
    if (is_shedding(delta, v)) out.insert(v);
  }
  return out;
}

VertexSet codominated_vertices(const Hypergraph& h) {
  VertexSet out;
  for (VertexId v : h.vertex_set()) {
    if (detail::codominated_witness(h.edges(), v)) out.insert(v);
  }
  return out;
}

namespace {

std::vector<VertexSet> drop_vertex(std::span<const VertexSet> edges, VertexId x) {
  std::vector<VertexSet> out;
  out.reserve(edges.size());
  for (VertexSet e : edges) {
    if (!e.contains(x)) out.push_back(e);
  }
  return out;
}

class CodismantleSearch {
 public:
  bool run(const std::vector<VertexSet>& edges) {
    if (edges.empty()) return true;
    std::vector<std::uint64_t> key;
    key.reserve(edges.size());
    for (VertexSet e : edges) key.push_back(e.bits());
    if (failed_.count(key) != 0) return false;

    VertexSet support;
    for (VertexSet e : edges) support |= e;
    for (VertexId x : support) {
      if (!detail::codominated_witness(edges, x)) continue;
      order_.push_back(x);
      if (run(drop_vertex(edges, x))) return true;
      order_.pop_back();
      backtracked_ = true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  std::vector<VertexId> order_;
  bool backtracked_ = false;

 private:
  std::set<std::vector<std::uint64_t>> failed_;
};

}  // namespace

std::optional<EliminationOrder> is_codismantlable(const Hypergraph& h) {
  CodismantleSearch search;
  const std::vector<VertexSet> edges(h.edges().begin(), h.edges().end());
  if (!search.run(edges)) return std::nullopt;
  EliminationOrder result;
  result.order = std::move(search.order_);
  result.backtracked = search.backtracked_;
  result.valid = replay_elimination(h, result.order);
  return result;
}

bool replay_elimination(const Hypergraph& h, std::span<const VertexId> order) {
  std::vector<VertexSet> edges(h.edges().begin(), h.edges().end());
  VertexSet removed;
  for (VertexId v : order) {
    if (v >= h.num_vertices() || removed.contains(v)) return false;
    if (!detail::codominated_witness(edges, v)) return false;
    edges = drop_vertex(edges, v);
    removed.insert(v);
  }
  return edges.empty();
}

VertexClassification theorem_main_report(const Hypergraph& h, const Limits& limits) {
  VertexClassification report;
  report.c5_free = !find_cycle(h, 5, limits).has_value();
  report.three_cycle_condition = three_cycle_edge_condition(h, limits);
  const SimplicialComplex delta = independence_complex(h);
  report.equivalence_holds = true;
  for (VertexId v : h.vertex_set()) {
    VertexRecord rec;
    rec.vertex = v;
    rec.shedding = is_shedding(delta, v);
    rec.codominated_witness = detail::codominated_witness(h.edges(), v);
    rec.codominated = rec.codominated_witness.has_value();
    if (rec.shedding != rec.codominated) report.equivalence_holds = false;
    report.records.push_back(rec);
  }
  return report;
}

}  // namespace hyperreg
