#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/rational.hpp>

namespace oracle {

using hyperreg::Hypergraph;
using hyperreg::VertexSet;

Set to_set(VertexSet s) {
  Set out;
  for (int v = 0; v < 64; ++v) {
    if ((s.bits() >> v) & 1U) out.insert(v);
  }
  return out;
}

Small from(const Hypergraph& h) {
  if (h.is_void()) throw std::invalid_argument("oracle: void hypergraph");
  Small s;
  s.n = static_cast<int>(h.num_vertices());
  for (VertexSet e : h.edges()) s.edges.push_back(to_set(e));
  return s;
}

namespace {

bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

std::vector<Set> subsets_of(const Set& s) {
  std::vector<int> items(s.begin(), s.end());
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    Set t;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) t.insert(items[i]);
    }
    out.push_back(t);
  }
  return out;
}

Set all_vertices(int n) {
  Set s;
  for (int v = 0; v < n; ++v) s.insert(v);
  return s;
}

std::vector<Set> minimal_sets(std::vector<Set> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Set> out;
  for (const Set& a : sets) {
    bool minimal = true;
    for (const Set& b : sets) {
      if (b != a && subset(b, a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace

bool independent(const Small& h, const Set& s) {
  for (const Set& e : h.edges) {
    if (subset(e, s)) return false;
  }
  return true;
}

std::vector<Set> faces(const Small& h) {
  std::vector<Set> out;
  for (const Set& s : subsets_of(all_vertices(h.n))) {
    if (independent(h, s)) out.push_back(s);
  }
  return out;
}

std::vector<Set> facets(const std::vector<Set>& fs) {
  std::vector<Set> out;
  for (const Set& a : fs) {
    bool maximal = true;
    for (const Set& b : fs) {
      if (b != a && subset(a, b)) maximal = false;
    }
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matchings matchings(const Small& h) {
  Matchings out;
  const std::size_t m = h.edges.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Set u;
    int k = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1U)) continue;
      if (!intersect(u, h.edges[i]).empty()) disjoint = false;
      u = unite(u, h.edges[i]);
      ++k;
    }
    bool semi = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1U) && subset(h.edges[i], u)) semi = false;
    }
    const int w = static_cast<int>(u.size()) - k;
    if (disjoint) out.m = std::max(out.m, w);
    if (semi) out.c_prime = std::max(out.c_prime, w);
    if (semi && disjoint) out.c = std::max(out.c, w);
  }
  return out;
}

int c_prime_by_vertex_sets(const Small& h) {
  int best = 0;
  for (const Set& u : subsets_of(all_vertices(h.n))) {
    Set covered;
    int inside = 0;
    for (const Set& e : h.edges) {
      if (subset(e, u)) {
        covered = unite(covered, e);
        ++inside;
      }
    }
    if (covered == u) best = std::max(best, static_cast<int>(u.size()) - inside);
  }
  return best;
}

Bouquets bouquets(const Small& h) {
  const int m = static_cast<int>(h.edges.size());
  if (m > 9) throw std::invalid_argument("oracle: too many edges for bouquet enumeration");
  Bouquets out;
  std::vector<int> label(static_cast<std::size_t>(m), 0);

  auto evaluate = [&](int groups) {
    std::vector<std::vector<int>> stems(static_cast<std::size_t>(groups));
    for (int i = 0; i < m; ++i) {
      if (label[static_cast<std::size_t>(i)] > 0) stems[static_cast<std::size_t>(label[static_cast<std::size_t>(i)] - 1)].push_back(i);
    }
    // fixed roots/flowers for multi-stem groups, candidate choices for single stems
    std::vector<std::vector<std::pair<Set, Set>>> choices;
    for (const auto& g : stems) {
      Set inter = h.edges[static_cast<std::size_t>(g[0])];
      Set uni;
      for (int i : g) {
        inter = intersect(inter, h.edges[static_cast<std::size_t>(i)]);
        uni = unite(uni, h.edges[static_cast<std::size_t>(i)]);
      }
      if (inter.empty()) return;
      std::vector<std::pair<Set, Set>> options;
      if (g.size() >= 2) {
        Set flowers;
        std::set_difference(uni.begin(), uni.end(), inter.begin(), inter.end(), std::inserter(flowers, flowers.begin()));
        options.emplace_back(inter, flowers);
      } else {
        const Set& e = h.edges[static_cast<std::size_t>(g[0])];
        for (const Set& r : subsets_of(e)) {
          if (r.empty() || r.size() == e.size()) continue;
          Set flowers;
          std::set_difference(e.begin(), e.end(), r.begin(), r.end(), std::inserter(flowers, flowers.begin()));
          options.emplace_back(r, flowers);
        }
        if (options.empty()) return;
      }
      choices.push_back(std::move(options));
    }

    // strong: one stem per group forming an induced matching
    bool strong = false;
    std::vector<int> pick(static_cast<std::size_t>(groups));
    std::function<void(int)> choose = [&](int g) {
      if (strong) return;
      if (g == groups) {
        Set u;
        for (int i : pick) {
          if (!intersect(u, h.edges[static_cast<std::size_t>(i)]).empty()) return;
          u = unite(u, h.edges[static_cast<std::size_t>(i)]);
        }
        for (int i = 0; i < m; ++i) {
          if (std::find(pick.begin(), pick.end(), i) == pick.end() && subset(h.edges[static_cast<std::size_t>(i)], u)) return;
        }
        strong = true;
        return;
      }
      for (int i : stems[static_cast<std::size_t>(g)]) {
        pick[static_cast<std::size_t>(g)] = i;
        choose(g + 1);
      }
    };
    choose(0);

    std::vector<std::size_t> at(static_cast<std::size_t>(groups), 0);
    while (true) {
      Set roots, flowers;
      for (int g = 0; g < groups; ++g) {
        const auto& [r, f] = choices[static_cast<std::size_t>(g)][at[static_cast<std::size_t>(g)]];
        roots = unite(roots, r);
        flowers = unite(flowers, f);
      }
      if (independent(h, roots)) out.d_prime = std::max(out.d_prime, static_cast<int>(flowers.size()));
      if (strong) out.d = std::max(out.d, static_cast<int>(flowers.size()));
      int g = 0;
      while (g < groups && ++at[static_cast<std::size_t>(g)] == choices[static_cast<std::size_t>(g)].size()) {
        at[static_cast<std::size_t>(g)] = 0;
        ++g;
      }
      if (g == groups) break;
    }
  };

  // labels as restricted growth strings: 0 unused, groups numbered by first use
  std::function<void(int, int)> assign = [&](int i, int groups) {
    if (i == m) {
      evaluate(groups);
      return;
    }
    for (int l = 0; l <= groups + 1; ++l) {
      label[static_cast<std::size_t>(i)] = l;
      assign(i + 1, std::max(groups, l));
    }
  };
  assign(0, 0);
  return out;
}

bool shedding(const Small& h, int x) {
  const std::vector<Set> all = faces(h);
  const std::vector<Set> top = facets(all);
  std::vector<Set> del;
  for (const Set& f : all) {
    if (!f.count(x)) del.push_back(f);
  }
  for (const Set& f : facets(del)) {
    if (std::find(top.begin(), top.end(), f) == top.end()) return false;
  }
  return true;
}

namespace {

std::vector<Set> neighbourhood(const Small& h, int x, int y) {
  std::vector<Set> out;
  for (const Set& e : h.edges) {
    if (e.count(x) && !e.count(y)) {
      Set r = e;
      r.erase(x);
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

bool codominated(const Small& h, int x) {
  for (const Set& e : h.edges) {
    if (!e.count(x)) continue;
    bool all = true;
    for (int y : e) {
      if (y == x) continue;
      const std::vector<Set> ny = neighbourhood(h, y, x);
      const std::vector<Set> nx = neighbourhood(h, x, y);
      for (const Set& s : ny) {
        if (std::find(nx.begin(), nx.end(), s) == nx.end()) all = false;
      }
    }
    if (all) return true;
  }
  return false;
}

namespace {

Small relabel_without(int n, const std::vector<Set>& edges, int x) {
  Small out;
  out.n = n - 1;
  for (const Set& e : edges) {
    Set r;
    for (int v : e) r.insert(v < x ? v : v - 1);
    out.edges.push_back(r);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

Small deletion(const Small& h, int x) {
  std::vector<Set> kept;
  for (const Set& e : h.edges) {
    if (!e.count(x)) kept.push_back(e);
  }
  return relabel_without(h.n, kept, x);
}

Small contraction(const Small& h, int x) {
  std::vector<Set> cut;
  for (Set e : h.edges) {
    e.erase(x);
    cut.push_back(e);
  }
  return relabel_without(h.n, minimal_sets(cut), x);
}

bool vertex_decomposable(const std::vector<Set>& fs, const Set& ground) {
  if (fs.empty()) return true;  // void complex
  if (fs.size() == 1) return true;
  Set support;
  for (const Set& f : fs) support = unite(support, f);
  for (int x : support) {
    std::vector<Set> link, del;
    for (const Set& f : fs) {
      Set r = f;
      r.erase(x);
      if (f.count(x)) link.push_back(r);
      del.push_back(r);
    }
    del = facets(del);
    link = facets(link);
    bool shed = true;
    for (const Set& f : del) {
      if (std::find(fs.begin(), fs.end(), f) == fs.end()) shed = false;
    }
    if (!shed) continue;
    Set rest = ground;
    rest.erase(x);
    if (vertex_decomposable(link, rest) && vertex_decomposable(del, rest)) return true;
  }
  return false;
}

int bigheight(const Small& h) {
  int best = 0;
  const std::vector<Set> all = subsets_of(all_vertices(h.n));
  auto cover = [&](const Set& s) {
    for (const Set& e : h.edges) {
      if (intersect(e, s).empty()) return false;
    }
    return true;
  };
  for (const Set& s : all) {
    if (!cover(s)) continue;
    bool minimal = true;
    for (int v : s) {
      Set t = s;
      t.erase(v);
      if (cover(t)) minimal = false;
    }
    if (minimal) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

bool has_cycle(const Small& h, int length) {
  std::vector<int> verts;
  std::vector<int> used_edges;
  const int m = static_cast<int>(h.edges.size());
  std::function<bool(int)> edges_for = [&](int i) -> bool {
    if (i == length) return true;
    const int a = verts[static_cast<std::size_t>(i)];
    const int b = verts[static_cast<std::size_t>((i + 1) % length)];
    for (int k = 0; k < m; ++k) {
      if (std::find(used_edges.begin(), used_edges.end(), k) != used_edges.end()) continue;
      const Set& e = h.edges[static_cast<std::size_t>(k)];
      if (!e.count(a) || !e.count(b)) continue;
      used_edges.push_back(k);
      if (edges_for(i + 1)) return true;
      used_edges.pop_back();
    }
    return false;
  };
  std::function<bool()> vertices = [&]() -> bool {
    if (static_cast<int>(verts.size()) == length) {
      used_edges.clear();
      return edges_for(0);
    }
    for (int v = 0; v < h.n; ++v) {
      if (std::find(verts.begin(), verts.end(), v) != verts.end()) continue;
      verts.push_back(v);
      if (vertices()) return true;
      verts.pop_back();
    }
    return false;
  };
  return vertices();
}

namespace {

using Q = boost::rational<long long>;

std::size_t rank_q(std::vector<std::vector<Q>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].numerator() == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].numerator() == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t rank_f2(std::vector<std::vector<Q>> q) {
  std::vector<std::vector<int>> a;
  for (const auto& row : q) {
    std::vector<int> r;
    for (const Q& x : row) r.push_back(static_cast<int>(((x.numerator() % 2) + 2) % 2));
    a.push_back(r);
  }
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r && a[i][c] != 0) {
        for (std::size_t k = c; k < cols; ++k) a[i][k] ^= a[r][k];
      }
    }
    ++r;
  }
  return r;
}

// reduced homology ranks of the complex given by all its faces
std::map<int, std::uint64_t> homology(const std::vector<Set>& fs, bool f2) {
  std::map<int, std::vector<Set>> by_dim;
  for (const Set& f : fs) by_dim[static_cast<int>(f.size()) - 1].push_back(f);
  auto boundary_rank = [&](int d) -> std::size_t {
    if (!by_dim.count(d) || !by_dim.count(d - 1)) return 0;
    const auto& rows = by_dim[d - 1];
    const auto& cols = by_dim[d];
    std::vector<std::vector<Q>> m(rows.size(), std::vector<Q>(cols.size(), Q(0)));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      for (int v : cols[j]) {
        Set face = cols[j];
        face.erase(v);
        const auto it = std::find(rows.begin(), rows.end(), face);
        m[static_cast<std::size_t>(it - rows.begin())][j] = Q(sign);
        sign = -sign;
      }
    }
    return f2 ? rank_f2(m) : rank_q(m);
  };
  std::map<int, std::uint64_t> out;
  for (const auto& [d, list] : by_dim) {
    const std::size_t r = list.size() - boundary_rank(d) - boundary_rank(d + 1);
    if (r != 0) out[d] = r;
  }
  return out;
}

std::map<std::pair<int, int>, std::uint64_t> hochster(const Small& h, bool f2) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  const std::vector<Set> all = faces(h);
  for (const Set& w : subsets_of(all_vertices(h.n))) {
    std::vector<Set> restricted;
    for (const Set& f : all) {
      if (subset(f, w)) restricted.push_back(f);
    }
    const int j = static_cast<int>(w.size());
    for (const auto& [d, r] : homology(restricted, f2)) out[{j - d - 1, j}] += r;
  }
  return out;
}

}  // namespace

std::map<std::pair<int, int>, std::uint64_t> betti(const Small& h) { return hochster(h, false); }
std::map<std::pair<int, int>, std::uint64_t> betti_f2(const Small& h) { return hochster(h, true); }

int reg(const std::map<std::pair<int, int>, std::uint64_t>& b) {
  int r = 0;
  for (const auto& [ij, v] : b) r = std::max(r, ij.second - ij.first);
  return r;
}

int pd(const std::map<std::pair<int, int>, std::uint64_t>& b) {
  int p = 0;
  for (const auto& [ij, v] : b) p = std::max(p, ij.first);
  return p;
}

}  // namespace oracle
