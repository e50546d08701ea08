#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperreg/complex.hpp"
#include "hyperreg/hypergraph.hpp"
#include "hyperreg/limits.hpp"

namespace hyperreg {

/// Coefficient field: p == 0 means the rationals, otherwise GF(p).
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);  // throws MalformedInput unless p is prime

  /// "Q", "F2", "F3", ...
  std::string name() const;
  bool operator==(const Field&) const = default;
};

/// Accepts "q", "f2", "f<p>" (any case). Throws MalformedInput.
Field parse_field(std::string_view text);

/// Rank of an integer matrix over the field. All rows share one length.
std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, Field field);

struct HomologyProfile {
  /// dimension -> rank, zero ranks omitted
  std::map<int, std::uint64_t> ranks;

  std::uint64_t rank(int dim) const;
  bool acyclic() const { return ranks.empty(); }
};

/// Reduced simplicial homology including dimension -1. Throws
/// SizeLimitExceeded above Limits::homology_ground_cap ground vertices.
HomologyProfile reduced_homology(const SimplicialComplex& d, Field field = {},
                                 const Limits& limits = {});

struct BettiTable {
  int n = 0;
  Field field;
  /// (i, j) -> β_{i,j} for i >= 1, zero entries omitted
  std::map<std::pair<int, int>, std::uint64_t> entries;

  std::uint64_t at(int i, int j) const;
  int reg() const;
  int pd() const;
  bool operator==(const BettiTable&) const = default;
};

/// Graded Betti numbers of R/I_Δ by Hochster's formula over every subset W
/// of the ground set. Throws SizeLimitExceeded above
/// Limits::betti_vertex_cap ground vertices.
BettiTable betti_table(const SimplicialComplex& d, Field field = {}, const Limits& limits = {});
BettiTable betti_table(const Hypergraph& h, Field field = {}, const Limits& limits = {});

struct RegPd {
  int reg = 0;
  int pd = 0;
};

RegPd reg_and_pd(const Hypergraph& h, Field field = {}, const Limits& limits = {});

/// {F : V \ F not a face}; the void complex and the full simplex swap.
/// Throws SizeLimitExceeded above Limits::homology_ground_cap.
SimplicialComplex alexander_dual(const SimplicialComplex& d, const Limits& limits = {});

}  // namespace hyperreg
