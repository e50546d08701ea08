#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hyperreg/generators.hpp"
#include "hyperreg/hypergraph.hpp"

namespace testing_support {

/// Vertices x1..xn, edges given with 1-based ids.
inline hyperreg::Hypergraph make(std::size_t n, std::initializer_list<std::initializer_list<int>> edges) {
  std::vector<hyperreg::VertexSet> sets;
  for (const auto& e : edges) {
    hyperreg::VertexSet s;
    for (int v : e) s.insert(static_cast<hyperreg::VertexId>(v - 1));
    sets.push_back(s);
  }
  return hyperreg::Hypergraph::from_sets(n, std::move(sets));
}

inline hyperreg::Hypergraph named(const std::string& name) { return hyperreg::named_instance(name); }

/// 1-based ids.
inline hyperreg::VertexSet ids(std::initializer_list<int> vs) {
  hyperreg::VertexSet s;
  for (int v : vs) s.insert(static_cast<hyperreg::VertexId>(v - 1));
  return s;
}

inline hyperreg::VertexId x(int v) { return static_cast<hyperreg::VertexId>(v - 1); }

}  // namespace testing_support
