#include "hyperreg/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hyperreg/error.hpp"

namespace hyperreg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform draw in [lo, hi] by rejection; std distributions differ between
/// standard libraries, this does not.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(seed ^ splitmix64(index))) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + x % span;
  }

  /// True with probability p (53-bit resolution).
  bool bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::mt19937_64 engine_;
};

int pair_count(int n) { return n * (n - 1) / 2; }

std::vector<std::pair<VertexId, VertexId>> lex_pairs(int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

void check_graph_order(int n) {
  if (n < 1 || n > 7) {
    throw Error(ErrorCode::SizeLimitExceeded, "graph enumeration needs 1 <= n <= 7, got " + std::to_string(n));
  }
}

/// Adds `e` keeping an antichain: drops e when it contains an edge, drops
/// the edges that contain e otherwise. False when e was a duplicate or
/// superset.
bool add_edge(std::vector<VertexSet>& edges, VertexSet e) {
  for (VertexSet f : edges) {
    if (f.subset_of(e)) return false;
  }
  std::erase_if(edges, [e](VertexSet f) { return e.subset_of(f); });
  edges.push_back(e);
  return true;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

VertexSet random_subset(Draw& draw, int n, int size) {
  std::vector<VertexId> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), VertexId{0});
  VertexSet out;
  for (int i = 0; i < size; ++i) {
    const auto j = static_cast<std::size_t>(draw.uniform(static_cast<std::uint64_t>(i),
                                                         static_cast<std::uint64_t>(n - 1)));
    std::swap(ids[static_cast<std::size_t>(i)], ids[j]);
    out.insert(ids[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& filter_names() {
  static const std::vector<std::string> names = {
      "c2_free", "c5_free", "three_cycle_condition", "vertex_decomposable", "d_uniform_strong", "graph"};
  return names;
}

void check_filters(const std::vector<std::string>& filters) {
  for (const std::string& f : filters) {
    if (std::find(filter_names().begin(), filter_names().end(), f) == filter_names().end()) {
      throw Error(ErrorCode::UnknownFilter, "unknown filter '" + f + "'");
    }
  }
}

void validate_family(const FamilySpec& s) {
  check_filters(s.filters);
  switch (s.kind) {
    case FamilyKind::AllGraphs: {
      const int lo = s.n_min == 0 ? 1 : s.n_min;
      check_graph_order(s.n);
      check_graph_order(lo);
      if (lo > s.n) throw Error(ErrorCode::MalformedInput, "n_min exceeds n");
      break;
    }
    case FamilyKind::RandomHypergraph: {
      const int lo = s.n_min == 0 ? s.n : s.n_min;
      if (s.n < 1 || s.n > static_cast<int>(kMaxVertices)) {
        throw Error(ErrorCode::SizeLimitExceeded, "random hypergraphs need 1 <= n <= 64");
      }
      if (lo < 1 || lo > s.n) throw Error(ErrorCode::MalformedInput, "n_min must lie in [1, n]");
      if (s.min_edge_size < 1 || s.max_edge_size < s.min_edge_size) {
        throw Error(ErrorCode::MalformedInput, "need 1 <= min_edge_size <= max_edge_size");
      }
      if (s.probability) {
        if (*s.probability < 0.0 || *s.probability > 1.0) {
          throw Error(ErrorCode::MalformedInput, "probability must lie in [0, 1]");
        }
        if (s.n > 24) throw Error(ErrorCode::SizeLimitExceeded, "probability mode needs n <= 24");
      } else {
        if (!s.edge_count || *s.edge_count < 0) {
          throw Error(ErrorCode::MalformedInput, "random hypergraphs need edge_count >= 0 or probability");
        }
        if (s.edge_count_max && *s.edge_count_max < *s.edge_count) {
          throw Error(ErrorCode::MalformedInput, "edge_count_max below edge_count");
        }
      }
      break;
    }
    case FamilyKind::Named:
      for (const std::string& name : s.names) named_instance(name);
      break;
  }
}

bool passes_filters(const Hypergraph& h, const std::vector<std::string>& filters, FilterContext& ctx) {
  for (const std::string& f : filters) {
    bool ok = false;
    if (f == "c2_free") {
      ok = !find_cycle(h, 2, ctx.limits).has_value();
    } else if (f == "c5_free") {
      ok = !find_cycle(h, 5, ctx.limits).has_value();
    } else if (f == "three_cycle_condition") {
      ok = three_cycle_edge_condition(h, ctx.limits);
    } else if (f == "vertex_decomposable") {
      ok = vertex_decomposable(independence_complex(h), ctx.vd_memo);
    } else if (f == "d_uniform_strong") {
      ok = !h.is_void() && !h.is_edgeless() && uniformity_profile(h).strong_intersection;
    } else if (f == "graph") {
      ok = !h.is_void() && h.is_graph();
    } else {
      throw Error(ErrorCode::UnknownFilter, "unknown filter '" + f + "'");
    }
    if (!ok) return false;
  }
  return true;
}

Hypergraph graph_from_mask(int n, std::uint64_t mask) {
  check_graph_order(n);
  const auto pairs = lex_pairs(n);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1U) edges.push_back(VertexSet{pairs[i].first, pairs[i].second});
  }
  return Hypergraph::from_sets(static_cast<std::size_t>(n), std::move(edges));
}

std::vector<Hypergraph> enumerate_graphs(int n) {
  check_graph_order(n);
  std::vector<Hypergraph> out;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(graph_from_mask(n, mask));
  return out;
}

std::uint64_t canonical_graph_mask(int n, std::uint64_t mask) {
  check_graph_order(n);
  const auto pairs = lex_pairs(n);
  std::array<std::array<int, 7>, 7> pair_index{};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pair_index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    pair_index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1U) {
      ++degree[pairs[i].first];
      ++degree[pairs[i].second];
    }
  }
  // Only relabellings that list vertices by ascending degree are tried;
  // degrees are invariant, so the minimum is still a canonical form.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(b)];
  });
  std::uint64_t best = ~std::uint64_t{0};
  auto consider = [&]() {
    // order[k] is the old vertex placed at position k
    std::uint64_t relabelled = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const int old = pair_index[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])]
                                  [static_cast<std::size_t>(order[static_cast<std::size_t>(b)])];
        if ((mask >> old) & 1U) relabelled |= std::uint64_t{1} << pair_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    }
    best = std::min(best, relabelled);
  };
  // permute within each block of equal degree
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && degree[static_cast<std::size_t>(order[j])] ==
                                   degree[static_cast<std::size_t>(order[i])]) {
      ++j;
    }
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(j));
    blocks.emplace_back(i, j);
    i = j;
  }
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      consider();
      return;
    }
    const auto [lo, hi] = blocks[block];
    const auto first = order.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto last = order.begin() + static_cast<std::ptrdiff_t>(hi);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

Hypergraph random_hypergraph(const FamilySpec& spec, std::uint64_t index) {
  if (spec.kind != FamilyKind::RandomHypergraph) {
    throw Error(ErrorCode::MalformedInput, "spec is not a random_hypergraph family");
  }
  validate_family(spec);
  Draw draw(spec.seed, index);
  const int lo_n = spec.n_min == 0 ? spec.n : spec.n_min;
  const int n = static_cast<int>(draw.uniform(static_cast<std::uint64_t>(lo_n), static_cast<std::uint64_t>(spec.n)));
  const int top = std::min(spec.max_edge_size, n);
  std::vector<VertexSet> edges;

  if (spec.probability) {
    // subsets by size, then lexicographically; a later superset never enters
    for (int size = spec.min_edge_size; size <= top; ++size) {
      std::vector<VertexSet> layer;
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        if (std::popcount(bits) == size) layer.emplace_back(bits);
      }
      std::sort(layer.begin(), layer.end(), lex_less);
      for (VertexSet e : layer) {
        if (draw.bernoulli(*spec.probability)) add_edge(edges, e);
      }
    }
    return Hypergraph::from_sets(static_cast<std::size_t>(n), std::move(edges));
  }

  const int want_lo = *spec.edge_count;
  const int want_hi = spec.edge_count_max.value_or(want_lo);
  const auto want = static_cast<std::size_t>(
      draw.uniform(static_cast<std::uint64_t>(want_lo), static_cast<std::uint64_t>(want_hi)));
  if (want > 0 && top < spec.min_edge_size) {
    throw Error(ErrorCode::Unsatisfiable, "no edge size fits on " + std::to_string(n) + " vertices");
  }
  // small spaces: draw uniformly among the subsets still incomparable to every
  // edge; large spaces: rejection sampling with a uniform size
  std::vector<VertexSet> pool;
  std::uint64_t space = 0;
  for (int size = spec.min_edge_size; size <= top; ++size) space += binomial(n, size);
  if (space <= 4096) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const int size = std::popcount(bits);
      if (size >= spec.min_edge_size && size <= top) pool.emplace_back(bits);
    }
    std::sort(pool.begin(), pool.end(), canonical_less);
  }
  const std::size_t max_attempts = 200 * want + 200;
  constexpr int max_rounds = 100;
  for (int round = 0; round < max_rounds; ++round) {
    edges.clear();
    if (!pool.empty()) {
      std::vector<VertexSet> open = pool;
      while (edges.size() < want && !open.empty()) {
        const VertexSet e = open[draw.uniform(0, open.size() - 1)];
        edges.push_back(e);
        std::erase_if(open, [e](VertexSet f) { return f.subset_of(e) || e.subset_of(f); });
      }
    } else {
      for (std::size_t attempts = 0; edges.size() < want && attempts < max_attempts; ++attempts) {
        const int size = static_cast<int>(draw.uniform(static_cast<std::uint64_t>(spec.min_edge_size),
                                                       static_cast<std::uint64_t>(top)));
        const VertexSet e = random_subset(draw, n, size);
        const bool comparable = std::any_of(edges.begin(), edges.end(),
                                            [e](VertexSet f) { return f.subset_of(e) || e.subset_of(f); });
        if (!comparable) edges.push_back(e);
      }
    }
    if (edges.size() == want) return Hypergraph::from_sets(static_cast<std::size_t>(n), std::move(edges));
  }
  throw Error(ErrorCode::Unsatisfiable, "could not place " + std::to_string(want) + " edges on " +
                                            std::to_string(n) + " vertices (draw " + std::to_string(index) + ")");
}

namespace {

struct NamedEntry {
  int n;
  std::vector<std::vector<VertexId>> edges;  // 1-based, as in x1..xn
};

const std::map<std::string, NamedEntry>& catalogue() {
  static const std::map<std::string, NamedEntry> table = {
      {"H1", {6, {{1, 2, 3}, {2, 3, 4}, {4, 5, 6}}}},
      {"H2", {5, {{1, 2, 3}, {2, 3, 4}, {4, 5}}}},
      {"star3", {4, {{1, 2}, {1, 3}, {1, 4}}}},
      {"P3", {3, {{1, 2}, {2, 3}}}},
      {"P4", {4, {{1, 2}, {2, 3}, {3, 4}}}},
      {"K3", {3, {{1, 2}, {2, 3}, {1, 3}}}},
      {"C4", {4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}}},
      {"C5", {5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}}},
      {"single_edge", {2, {{1, 2}}}},
      {"two_disjoint_edges", {4, {{1, 2}, {3, 4}}}},
      {"three_cycle_example", {4, {{1, 2, 3}, {3, 4}, {1, 4}}}},
      {"uniform_example", {5, {{1, 2, 3}, {2, 3, 4}, {2, 3, 5}}}},
      {"edgeless3", {3, {}}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& named_instances() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, entry] : catalogue()) out.push_back(name);
    return out;
  }();
  return names;
}

Hypergraph named_instance(const std::string& name) {
  auto it = catalogue().find(name);
  if (it == catalogue().end()) throw Error(ErrorCode::MalformedInput, "unknown named instance '" + name + "'");
  std::vector<VertexSet> edges;
  for (const auto& e : it->second.edges) {
    VertexSet s;
    for (VertexId v : e) s.insert(v - 1);
    edges.push_back(s);
  }
  return Hypergraph::from_sets(static_cast<std::size_t>(it->second.n), std::move(edges));
}

InstanceStream::InstanceStream(FamilySpec spec) : spec_(std::move(spec)) {
  validate_family(spec_);
  switch (spec_.kind) {
    case FamilyKind::AllGraphs: {
      const int lo = spec_.n_min == 0 ? 1 : spec_.n_min;
      if (spec_.dedup) {
        for (int n = lo; n <= spec_.n; ++n) {
          std::set<std::uint64_t> seen;
          const std::uint64_t total = std::uint64_t{1} << pair_count(n);
          for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (seen.insert(canonical_graph_mask(n, mask)).second) graphs_.emplace_back(n, mask);
          }
        }
        size_ = graphs_.size();
      } else {
        for (int n = lo; n <= spec_.n; ++n) size_ += std::uint64_t{1} << pair_count(n);
      }
      break;
    }
    case FamilyKind::RandomHypergraph:
      size_ = spec_.count;
      break;
    case FamilyKind::Named:
      size_ = spec_.names.size();
      break;
  }
}

Hypergraph InstanceStream::at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorCode::MalformedInput, "stream index out of range");
  switch (spec_.kind) {
    case FamilyKind::AllGraphs: {
      if (spec_.dedup) return graph_from_mask(graphs_[index].first, graphs_[index].second);
      int n = spec_.n_min == 0 ? 1 : spec_.n_min;
      while (index >= (std::uint64_t{1} << pair_count(n))) {
        index -= std::uint64_t{1} << pair_count(n);
        ++n;
      }
      return graph_from_mask(n, index);
    }
    case FamilyKind::RandomHypergraph:
      return random_hypergraph(spec_, index);
    case FamilyKind::Named:
      return named_instance(spec_.names[index]);
  }
  return Hypergraph{};
}

}  // namespace hyperreg
