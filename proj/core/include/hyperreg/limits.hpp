#pragma once

#include <cstddef>

namespace hyperreg {

/// Search caps shared by every exponential routine. Exceeding one raises
/// ErrorCode::SearchLimitExceeded or ErrorCode::SizeLimitExceeded.
struct Limits {
  /// |E(H)| for the matching-number searches.
  std::size_t matching_edge_cap = 20;
  /// |E(H)| for the bouquet searches.
  std::size_t bouquet_edge_cap = 20;
  /// Longest Berge cycle the cycle finder will look for.
  std::size_t cycle_length_cap = 7;
  /// |E(H)| for the cycle finder.
  std::size_t cycle_edge_cap = 20;
  /// Ground-set size for reduced homology.
  std::size_t homology_ground_cap = 14;
  /// |V(H)| for Hochster sums (2^n subsets).
  std::size_t betti_vertex_cap = 12;
};

}  // namespace hyperreg
