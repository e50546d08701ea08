#include "hyperreg/homological.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperreg/error.hpp"

namespace hyperreg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::size_t rank_gf2(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] % 2 != 0) m[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.size() && (m[pivot][c / 64] & bit) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && (m[r][c / 64] & bit) != 0) {
        for (std::size_t w = 0; w < words; ++w) m[r][w] ^= m[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols));
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m[r][c] = static_cast<std::uint64_t>(((rows[r][c] % sp) + sp) % sp);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = power_mod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = (m[r][k] + (p - factor) * m[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

template <typename T>
struct Checked;

template <>
struct Checked<std::int64_t> {
  static bool mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                      std::int64_t& out) {
    std::int64_t ab = 0;
    std::int64_t cd = 0;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd)) return false;
    return !__builtin_sub_overflow(ab, cd, &out);
  }
};

template <>
struct Checked<boost::multiprecision::cpp_int> {
  static bool mul_sub(const boost::multiprecision::cpp_int& a, const boost::multiprecision::cpp_int& b,
                      const boost::multiprecision::cpp_int& c, const boost::multiprecision::cpp_int& d,
                      boost::multiprecision::cpp_int& out) {
    out = a * b - c * d;
    return true;
  }
};

/// Fraction-free elimination; false when T overflowed.
template <typename T>
bool bareiss_rank(std::vector<std::vector<T>> m, std::size_t& rank_out) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        T value;
        if (!Checked<T>::mul_sub(m[rank][c], m[r][k], m[r][c], m[rank][k], value)) return false;
        m[r][k] = value / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  rank_out = rank;
  return true;
}

std::size_t rank_rational(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t rank = 0;
  if (bareiss_rank(rows, rank)) return rank;
  std::vector<std::vector<boost::multiprecision::cpp_int>> big(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) big[r].assign(rows[r].begin(), rows[r].end());
  bareiss_rank(std::move(big), rank);
  return rank;
}

void check_ground(VertexSet ground, std::size_t cap, const char* what) {
  if (static_cast<std::size_t>(ground.size()) > cap) {
    throw Error(ErrorCode::SizeLimitExceeded, std::string(what) + ": " + std::to_string(ground.size()) +
                                                  " vertices exceed the cap " + std::to_string(cap));
  }
}

/// Faces of a complex over a packed ground {0..g-1}, grouped by size.
struct FaceLattice {
  std::vector<std::vector<std::uint32_t>> by_size;  // by_size[s] = faces with s vertices
  std::vector<std::int32_t> index;                  // mask -> position in its size class

  FaceLattice(std::span<const VertexSet> packed_facets, int g) : index(std::size_t{1} << g, -1) {
    std::vector<char> seen(std::size_t{1} << g, 0);
    for (VertexSet f : packed_facets) {
      const auto full = static_cast<std::uint32_t>(f.bits());
      // walk every submask of the facet
      std::uint32_t sub = full;
      while (true) {
        seen[sub] = 1;
        if (sub == 0) break;
        sub = (sub - 1) & full;
      }
    }
    by_size.assign(static_cast<std::size_t>(g) + 1, {});
    for (std::uint32_t mask = 0; mask < seen.size(); ++mask) {
      if (!seen[mask]) continue;
      auto& bucket = by_size[static_cast<std::size_t>(std::popcount(mask))];
      index[mask] = static_cast<std::int32_t>(bucket.size());
      bucket.push_back(mask);
    }
  }

  std::size_t count(int size) const {
    if (size < 0 || size >= static_cast<int>(by_size.size())) return 0;
    return by_size[static_cast<std::size_t>(size)].size();
  }
};

/// Rank of the boundary map from faces with `size` vertices to faces with
/// size - 1 vertices.
std::size_t boundary_rank(const FaceLattice& lattice, int size, Field field) {
  const std::size_t rows = lattice.count(size);
  const std::size_t cols = lattice.count(size - 1);
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  const auto& faces = lattice.by_size[static_cast<std::size_t>(size)];
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint32_t face = faces[r];
    std::int64_t sign = 1;
    for (std::uint32_t rest = face; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      m[r][static_cast<std::size_t>(lattice.index[face ^ bit])] = sign;
      sign = -sign;
    }
  }
  return matrix_rank(std::move(m), field);
}

HomologyProfile homology_packed(std::span<const VertexSet> packed_facets, int g, Field field) {
  HomologyProfile out;
  if (packed_facets.empty()) return out;  // void complex
  const FaceLattice lattice(packed_facets, g);
  int top = 0;
  for (VertexSet f : packed_facets) top = std::max(top, f.size());
  // rank_out[s] = rank of the boundary leaving faces of size s
  std::vector<std::size_t> rank_out(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 1; s <= top; ++s) rank_out[static_cast<std::size_t>(s)] = boundary_rank(lattice, s, field);
  for (int s = 0; s <= top; ++s) {
    const std::size_t faces = lattice.count(s);
    const std::size_t r = faces - rank_out[static_cast<std::size_t>(s)] -
                          rank_out[static_cast<std::size_t>(s) + 1];
    if (r != 0) out.ranks[s - 1] = r;
  }
  return out;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::MalformedInput, std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::name() const {
  if (p == 0) return "Q";
  return "F" + std::to_string(p);
}

Field parse_field(std::string_view text) {
  std::string lower(text);
  for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "q") return Field::rationals();
  if (lower.size() >= 2 && lower[0] == 'f') {
    std::uint32_t p = 0;
    const char* first = lower.data() + 1;
    const char* last = lower.data() + lower.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc{} && ptr == last) return Field::prime(p);
  }
  throw Error(ErrorCode::MalformedInput, "unknown field '" + std::string(text) + "' (use q, f2 or f<p>)");
}

std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, Field field) {
  if (rows.empty() || rows.front().empty()) return 0;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw Error(ErrorCode::MalformedInput, "ragged matrix");
  }
  if (field.p == 0) return rank_rational(rows);
  if (field.p == 2) return rank_gf2(rows);
  return rank_mod_p(rows, field.p);
}

std::uint64_t HomologyProfile::rank(int dim) const {
  auto it = ranks.find(dim);
  return it == ranks.end() ? 0 : it->second;
}

HomologyProfile reduced_homology(const SimplicialComplex& d, Field field, const Limits& limits) {
  check_ground(d.ground_set(), limits.homology_ground_cap, "reduced homology");
  std::vector<VertexSet> packed;
  packed.reserve(d.facets().size());
  for (VertexSet f : d.facets()) packed.push_back(compress(f, d.ground_set()));
  return homology_packed(packed, d.ground_set().size(), field);
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::reg() const {
  int r = 0;
  for (const auto& [ij, value] : entries) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::pd() const {
  int p = 0;
  for (const auto& [ij, value] : entries) p = std::max(p, ij.first);
  return p;
}

BettiTable betti_table(const SimplicialComplex& d, Field field, const Limits& limits) {
  const VertexSet ground = d.ground_set();
  check_ground(ground, limits.betti_vertex_cap, "Betti table");
  BettiTable table;
  table.n = ground.size();
  table.field = field;
  if (d.is_void()) return table;

  const int g = ground.size();
  std::vector<VertexSet> packed;
  for (VertexSet f : d.facets()) packed.push_back(compress(f, ground));

  std::vector<VertexSet> restricted;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << g); ++w) {
    const VertexSet ws(w);
    restricted.clear();
    VertexSet common = ws;
    for (VertexSet f : packed) {
      restricted.push_back(f & ws);
      common &= f;
    }
    // a cone over any vertex of W is acyclic
    if (!common.empty()) continue;
    restricted = maximal_elements(std::move(restricted));
    const VertexSet local_ground = ws;
    std::vector<VertexSet> local;
    local.reserve(restricted.size());
    for (VertexSet f : restricted) local.push_back(compress(f, local_ground));
    const HomologyProfile hp = homology_packed(local, ws.size(), field);
    const int j = ws.size();
    for (const auto& [dim, rank] : hp.ranks) {
      const int i = j - dim - 1;
      if (i >= 1) table.entries[{i, j}] += rank;
    }
  }
  return table;
}

BettiTable betti_table(const Hypergraph& h, Field field, const Limits& limits) {
  if (h.num_vertices() > limits.betti_vertex_cap) {
    throw Error(ErrorCode::SizeLimitExceeded, "Betti table: " + std::to_string(h.num_vertices()) +
                                                   " vertices exceed the cap " +
                                                   std::to_string(limits.betti_vertex_cap));
  }
  return betti_table(independence_complex(h), field, limits);
}

RegPd reg_and_pd(const Hypergraph& h, Field field, const Limits& limits) {
  const BettiTable t = betti_table(h, field, limits);
  return {t.reg(), t.pd()};
}

SimplicialComplex alexander_dual(const SimplicialComplex& d, const Limits& limits) {
  const VertexSet ground = d.ground_set();
  check_ground(ground, limits.homology_ground_cap, "Alexander dual");
  if (d.is_void()) return SimplicialComplex::simplex(ground);
  const int g = ground.size();
  std::vector<VertexSet> packed;
  for (VertexSet f : d.facets()) packed.push_back(compress(f, ground));
  const FaceLattice lattice(packed, g);
  const VertexSet all = VertexSet::first(static_cast<std::size_t>(g));
  std::vector<VertexSet> facets;
  for (std::uint64_t n = 0; n < (std::uint64_t{1} << g); ++n) {
    if (lattice.index[n] >= 0) continue;  // a face
    const VertexSet ns(n);
    bool minimal = true;
    for (VertexId v : ns) {
      if (lattice.index[ns.without(v).bits()] < 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) facets.push_back(expand(all - ns, ground));
  }
  return SimplicialComplex(ground, std::move(facets));
}

}  // namespace hyperreg
