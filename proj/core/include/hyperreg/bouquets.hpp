#pragma once

#include <optional>
#include <vector>

#include "hyperreg/hypergraph.hpp"
#include "hyperreg/limits.hpp"
#include "hyperreg/matchings.hpp"

namespace hyperreg {

/// Stems sharing a common vertex. With two or more stems the roots are the
/// full intersection; a single stem takes a nonempty proper subset.
struct Bouquet {
  std::vector<std::size_t> stems;  // ascending edge indices
  VertexSet roots;

  bool operator==(const Bouquet&) const = default;
};

/// Throws InvalidBouquet (or UnknownEdge for a bad index).
void validate_bouquet(const Hypergraph& h, const Bouquet& b);

VertexSet bouquet_flowers(const Hypergraph& h, const Bouquet& b);

struct BouquetSet {
  std::vector<Bouquet> bouquets;
  VertexSet flowers;               // F(B)
  VertexSet roots;                 // R(B)
  std::vector<std::size_t> stems;  // S(B), ascending edge indices
  bool strongly_disjoint = false;
  bool semi_strongly_disjoint = false;
  /// One stem per bouquet forming an induced matching, when there is one.
  std::optional<std::vector<std::size_t>> strong_stems;

  int size() const { return flowers.size(); }
};

/// Validates every bouquet, rejects stems shared between bouquets
/// (InvalidBouquet) and computes F, R, S and both disjointness flags.
/// Bouquets are stored ordered by their least stem.
BouquetSet classify_bouquet_set(const Hypergraph& h, std::vector<Bouquet> bouquets);

/// Single-stem bouquets with root {min E}; |F| equals the family weight.
/// Singleton edges are skipped.
BouquetSet bouquets_from_matching(const Hypergraph& h, const EdgeFamily& matching);

struct BouquetInvariants {
  int d = 0;
  int d_prime = 0;
  BouquetSet d_witness;
  BouquetSet d_prime_witness;
};

/// Exact d_H and d'_H. Throws SearchLimitExceeded above
/// Limits::bouquet_edge_cap edges.
BouquetInvariants bouquet_invariants(const Hypergraph& h, const Limits& limits = {});

int strongly_disjoint_number(const Hypergraph& h, const Limits& limits = {});
int semi_strongly_disjoint_number(const Hypergraph& h, const Limits& limits = {});

struct CoverConstruction {
  VertexSet cover;         // minimal vertex cover inside F(B)
  VertexSet greedy_cover;  // before redundant vertices were dropped
  bool greedy_was_minimal = false;
};

/// Walks the non-stems and then the stems in canonical order, hitting each
/// uncovered edge at its least vertex in F(B); redundant picks are then
/// dropped from the top. Throws NotSemiStronglyDisjoint,
/// NotOptimalWitness (|F(B)| != d'_H) or FlowersNotCover.
CoverConstruction cover_from_bouquets(const Hypergraph& h, const BouquetSet& b,
                                      const Limits& limits = {});

/// Total order used to pick optimal witnesses: stem lists first, then the
/// root sets bouquet by bouquet.
bool bouquet_key_less(const BouquetSet& a, const BouquetSet& b);

}  // namespace hyperreg
