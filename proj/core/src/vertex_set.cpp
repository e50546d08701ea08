#include "hyperreg/vertex_set.hpp"

#include <algorithm>

namespace hyperreg {

namespace {

void sort_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  sort_unique(sets);
  // Sorted by size, so any subset of sets[i] appears before it.
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(),
                                       [s](VertexSet t) { return t.subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  sort_unique(sets);
  std::vector<VertexSet> kept;
  kept.reserve(sets.size());
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const VertexSet s = *it;
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](VertexSet t) { return s.subset_of(t); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

}  // namespace hyperreg
