#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hyperreg {

/// Index of a vertex inside one hypergraph (or one complex's universe).
using VertexId = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertex ids stored as a 64-bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr VertexId operator*() const {
      return static_cast<VertexId>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<VertexId> ids) {
    for (VertexId v : ids) insert(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(VertexId v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr VertexId min() const {
    return static_cast<VertexId>(std::countr_zero(bits_));
  }
  constexpr VertexId max() const {
    return static_cast<VertexId>(63 - std::countl_zero(bits_));
  }

  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(VertexId v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(VertexId v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(VertexSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const {
    return std::vector<VertexId>(begin(), end());
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending id sequences of two sets.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int t = std::countr_zero(diff);
  if ((a.bits() >> t) & 1U) {
    // a holds t where b holds something larger, or b has run out.
    return (b.bits() >> t) != 0;
  }
  return (a.bits() >> t) == 0;
}

/// Canonical edge order: by size, then lexicographically.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const {
    return canonical_less(a, b);
  }
};

/// Drops vertex x and shifts every id above x down by one.
constexpr VertexSet remove_index(VertexSet s, VertexId x) {
  const std::uint64_t low_mask = (std::uint64_t{1} << x) - 1;
  const std::uint64_t low = s.bits() & low_mask;
  const std::uint64_t high = x >= 63 ? 0 : (s.bits() >> (x + 1)) << x;
  return VertexSet(low | high);
}

/// Inverse of remove_index: makes room for id x (which is left empty).
constexpr VertexSet insert_index(VertexSet s, VertexId x) {
  const std::uint64_t low_mask = (std::uint64_t{1} << x) - 1;
  const std::uint64_t low = s.bits() & low_mask;
  const std::uint64_t high = (s.bits() & ~low_mask) << 1;
  return VertexSet(low | high);
}

/// Maps the members of `s` (which must lie inside `ground`) to their rank
/// within `ground`, i.e. packs them into {0, ..., |ground|-1}.
constexpr VertexSet compress(VertexSet s, VertexSet ground) {
  std::uint64_t out = 0;
  int rank = 0;
  for (VertexId v : ground) {
    if (s.contains(v)) out |= std::uint64_t{1} << rank;
    ++rank;
  }
  return VertexSet(out);
}

/// Inverse of compress.
constexpr VertexSet expand(VertexSet packed, VertexSet ground) {
  std::uint64_t out = 0;
  int rank = 0;
  for (VertexId v : ground) {
    if (packed.contains(static_cast<VertexId>(rank))) out |= std::uint64_t{1} << v;
    ++rank;
  }
  return VertexSet(out);
}

/// Keeps the inclusion-minimal members, sorted canonically and deduplicated.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);

/// Keeps the inclusion-maximal members, sorted canonically and deduplicated.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets);

}  // namespace hyperreg
