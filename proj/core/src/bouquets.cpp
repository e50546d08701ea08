#include "hyperreg/bouquets.hpp"

#include <algorithm>

#include "hyperreg/error.hpp"

namespace hyperreg {

namespace {

void check_cap(const Hypergraph& h, const Limits& limits) {
  if (h.num_edges() > limits.bouquet_edge_cap) {
    throw Error(ErrorCode::SearchLimitExceeded,
                std::to_string(h.num_edges()) + " edges exceed the bouquet cap " +
                    std::to_string(limits.bouquet_edge_cap));
  }
}

VertexSet stem_union(const Hypergraph& h, const Bouquet& b) {
  VertexSet u;
  for (std::size_t i : b.stems) u |= h.edge(i);
  return u;
}

VertexSet stem_intersection(const Hypergraph& h, const Bouquet& b) {
  VertexSet r = h.edge(b.stems.front());
  for (std::size_t i : b.stems) r &= h.edge(i);
  return r;
}

bool min_stem_less(const Bouquet& a, const Bouquet& b) {
  return a.stems.front() < b.stems.front();
}

/// Chooses one stem per bouquet so that the choices form an induced matching.
class StemChoice {
 public:
  StemChoice(const Hypergraph& h, const std::vector<Bouquet>& bouquets)
      : h_(h), bouquets_(bouquets) {}

  std::optional<std::vector<std::size_t>> run() {
    chosen_.clear();
    if (dfs(0, VertexSet{})) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t i, VertexSet u) {
    if (i == bouquets_.size()) {
      std::vector<std::size_t> members = chosen_;
      std::sort(members.begin(), members.end());
      return classify_family(h_, members).flags.induced;
    }
    for (std::size_t s : bouquets_[i].stems) {
      const VertexSet e = h_.edge(s);
      if (e.intersects(u)) continue;
      chosen_.push_back(s);
      if (dfs(i + 1, u | e)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Hypergraph& h_;
  const std::vector<Bouquet>& bouquets_;
  std::vector<std::size_t> chosen_;
};

/// Ordering key of a bouquet list that is already sorted by least stem.
struct Key {
  std::vector<std::size_t> all_stems;
  std::vector<std::vector<std::size_t>> stems;
  std::vector<VertexSet> roots;
};

Key make_key(const std::vector<Bouquet>& bouquets) {
  Key k;
  for (const Bouquet& b : bouquets) {
    k.all_stems.insert(k.all_stems.end(), b.stems.begin(), b.stems.end());
    k.stems.push_back(b.stems);
    k.roots.push_back(b.roots);
  }
  std::sort(k.all_stems.begin(), k.all_stems.end());
  return k;
}

bool key_less(const Key& a, const Key& b) {
  if (a.all_stems != b.all_stems) return a.all_stems < b.all_stems;
  if (a.stems != b.stems) return a.stems < b.stems;
  return std::lexicographical_compare(a.roots.begin(), a.roots.end(), b.roots.begin(),
                                      b.roots.end(), lex_less);
}

std::vector<std::size_t> bouquet_candidates(const Hypergraph& h) {
  // A singleton edge is never a stem: a lone stem needs a proper nonempty
  // root set, and no other edge can contain its vertex.
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge(i).size() >= 2) out.push_back(i);
  }
  return out;
}

/// d_H: pick the induced matching of chosen stems first, then hand each
/// remaining edge to at most one bouquet whose roots it still meets.
class StrongSearch {
 public:
  StrongSearch(const Hypergraph& h, bool want_witness)
      : h_(h), witness_(want_witness), candidates_(bouquet_candidates(h)) {}

  int run() {
    anchor(0, VertexSet{});
    return best_;
  }

  const std::vector<Bouquet>& witness() const { return best_bouquets_; }

 private:
  struct Open {
    std::vector<std::size_t> stems;
    VertexSet inter;
    VertexSet uni;
  };

  bool outsider_inside(VertexSet u) const {
    for (std::size_t i = 0; i < h_.num_edges(); ++i) {
      if (h_.edge(i).subset_of(u) &&
          std::find(anchors_.begin(), anchors_.end(), i) == anchors_.end()) {
        return true;
      }
    }
    return false;
  }

  void anchor(std::size_t pos, VertexSet u) {
    if (pos == candidates_.size()) {
      if (!anchors_.empty()) assign_all();
      return;
    }
    const std::size_t idx = candidates_[pos];
    const VertexSet e = h_.edge(idx);
    if (!e.intersects(u)) {
      anchors_.push_back(idx);
      if (!outsider_inside(u | e)) anchor(pos + 1, u | e);
      anchors_.pop_back();
    }
    anchor(pos + 1, u);
  }

  void assign_all() {
    open_.clear();
    others_.clear();
    for (std::size_t a : anchors_) open_.push_back({{a}, h_.edge(a), h_.edge(a)});
    for (std::size_t c : candidates_) {
      if (std::find(anchors_.begin(), anchors_.end(), c) == anchors_.end()) others_.push_back(c);
    }
    rest_union_.assign(others_.size() + 1, VertexSet{});
    for (std::size_t j = others_.size(); j-- > 0;) {
      rest_union_[j] = rest_union_[j + 1] | h_.edge(others_[j]);
    }
    assign(0);
  }

  bool hopeless(int ub) const { return witness_ ? ub < best_ : ub <= best_; }

  void assign(std::size_t j) {
    VertexSet cover = rest_union_[j];
    for (const Open& b : open_) cover |= b.uni;
    if (hopeless(cover.size())) return;
    if (j == others_.size()) {
      choose_roots(0, VertexSet{});
      return;
    }
    const std::size_t idx = others_[j];
    const VertexSet e = h_.edge(idx);
    for (Open& b : open_) {
      if (!e.intersects(b.inter)) continue;
      const Open saved = b;
      b.stems.push_back(idx);
      b.inter &= e;
      b.uni |= e;
      assign(j + 1);
      b = saved;
    }
    assign(j + 1);
  }

  void choose_roots(std::size_t i, VertexSet flowers) {
    if (i == open_.size()) {
      offer(flowers);
      return;
    }
    const Open& b = open_[i];
    if (b.stems.size() >= 2) {
      roots_.push_back(b.inter);
      choose_roots(i + 1, flowers | (b.uni - b.inter));
      roots_.pop_back();
      return;
    }
    for (VertexId v : b.uni) {
      roots_.push_back(VertexSet::singleton(v));
      choose_roots(i + 1, flowers | b.uni.without(v));
      roots_.pop_back();
    }
  }

  void offer(VertexSet flowers) {
    const int value = flowers.size();
    if (value < best_ || (value == best_ && !witness_)) return;
    std::vector<Bouquet> bs;
    bs.reserve(open_.size());
    for (std::size_t i = 0; i < open_.size(); ++i) {
      Bouquet b{open_[i].stems, roots_[i]};
      std::sort(b.stems.begin(), b.stems.end());
      bs.push_back(std::move(b));
    }
    std::sort(bs.begin(), bs.end(), min_stem_less);
    if (value == best_ && !key_less(make_key(bs), make_key(best_bouquets_))) return;
    best_ = value;
    best_bouquets_ = std::move(bs);
  }

  const Hypergraph& h_;
  bool witness_;
  std::vector<std::size_t> candidates_;
  std::vector<std::size_t> anchors_;
  std::vector<Open> open_;
  std::vector<std::size_t> others_;
  std::vector<VertexSet> rest_union_;
  std::vector<VertexSet> roots_;
  int best_ = 0;
  std::vector<Bouquet> best_bouquets_;
};

/// d'_H. Splitting every bouquet into single stems rooted at one old root
/// never shrinks F and keeps R inside the same independent set, so it is
/// enough to take a facet R of the independence complex, use every edge
/// meeting R as a stem and root it at one vertex of E ∩ R.
class SemiStrongSearch {
 public:
  SemiStrongSearch(const Hypergraph& h, bool want_witness) : h_(h), witness_(want_witness) {}

  int run() {
    for (VertexSet r : maximal_independent_sets(h_.edges(), h_.vertex_set())) facet(r);
    return best_;
  }

  const std::vector<Bouquet>& witness() const { return best_bouquets_; }

 private:
  void facet(VertexSet r) {
    stems_.clear();
    choice_edges_.clear();
    VertexSet base;
    for (std::size_t i : bouquet_candidates(h_)) {
      const VertexSet e = h_.edge(i);
      if (!e.intersects(r)) continue;
      stems_.push_back(i);
      base |= e - r;
      if ((e & r).size() >= 2) choice_edges_.push_back(stems_.size() - 1);
    }
    if (stems_.empty()) return;
    r_ = r;
    roots_.assign(stems_.size(), VertexId{0});
    for (std::size_t s = 0; s < stems_.size(); ++s) roots_[s] = (h_.edge(stems_[s]) & r).min();
    rest_.assign(choice_edges_.size() + 1, VertexSet{});
    for (std::size_t j = choice_edges_.size(); j-- > 0;) {
      rest_[j] = rest_[j + 1] | (h_.edge(stems_[choice_edges_[j]]) & r);
    }
    choose(0, base);
  }

  void choose(std::size_t j, VertexSet flowers) {
    const int ub = (flowers | rest_[j]).size();
    if (witness_ ? ub < best_ : ub <= best_) return;
    if (j == choice_edges_.size()) {
      offer(flowers);
      return;
    }
    const std::size_t s = choice_edges_[j];
    const VertexSet inside = h_.edge(stems_[s]) & r_;
    for (VertexId v : inside) {
      roots_[s] = v;
      choose(j + 1, flowers | inside.without(v));
    }
    roots_[s] = inside.min();
  }

  void offer(VertexSet flowers) {
    const int value = flowers.size();
    if (value < best_) return;
    if (!witness_) {
      best_ = value;
      return;
    }
    std::vector<Bouquet> bs = pruned(flowers);
    if (value > best_ || best_bouquets_.empty() || key_less(make_key(bs), make_key(best_bouquets_))) {
      best_ = value;
      best_bouquets_ = std::move(bs);
    }
  }

  /// Drops stems (highest index first) whose removal leaves F unchanged.
  std::vector<Bouquet> pruned(VertexSet flowers) const {
    std::vector<Bouquet> bs;
    for (std::size_t s = 0; s < stems_.size(); ++s) {
      bs.push_back(Bouquet{{stems_[s]}, VertexSet::singleton(roots_[s])});
    }
    for (std::size_t s = bs.size(); s-- > 0;) {
      VertexSet without;
      for (std::size_t t = 0; t < bs.size(); ++t) {
        if (t != s) without |= h_.edge(bs[t].stems.front()).without(bs[t].roots.min());
      }
      if (without == flowers) bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(s));
    }
    return bs;
  }

  const Hypergraph& h_;
  bool witness_;
  VertexSet r_;
  std::vector<std::size_t> stems_;
  std::vector<std::size_t> choice_edges_;
  std::vector<VertexId> roots_;
  std::vector<VertexSet> rest_;
  int best_ = 0;
  std::vector<Bouquet> best_bouquets_;
};

}  // namespace

void validate_bouquet(const Hypergraph& h, const Bouquet& b) {
  if (b.stems.empty()) throw Error(ErrorCode::InvalidBouquet, "bouquet without stems");
  for (std::size_t i = 0; i < b.stems.size(); ++i) {
    if (b.stems[i] >= h.num_edges()) {
      throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(b.stems[i]));
    }
    if (i > 0 && b.stems[i] <= b.stems[i - 1]) {
      throw Error(ErrorCode::InvalidBouquet, "stems must be distinct and ascending");
    }
  }
  if (b.stems.size() == 1) {
    const VertexSet e = h.edge(b.stems.front());
    if (b.roots.empty() || !b.roots.proper_subset_of(e)) {
      throw Error(ErrorCode::InvalidBouquet,
                  "roots of a single stem " + h.format(e) + " must be a nonempty proper subset");
    }
    return;
  }
  const VertexSet inter = stem_intersection(h, b);
  if (inter.empty()) throw Error(ErrorCode::InvalidBouquet, "stems have no common vertex");
  if (b.roots != inter) {
    throw Error(ErrorCode::InvalidBouquet, "roots must equal the common intersection " + h.format(inter));
  }
}

VertexSet bouquet_flowers(const Hypergraph& h, const Bouquet& b) {
  return stem_union(h, b) - b.roots;
}

BouquetSet classify_bouquet_set(const Hypergraph& h, std::vector<Bouquet> bouquets) {
  BouquetSet out;
  for (Bouquet& b : bouquets) {
    std::sort(b.stems.begin(), b.stems.end());
    validate_bouquet(h, b);
    for (std::size_t s : b.stems) out.stems.push_back(s);
    out.flowers |= bouquet_flowers(h, b);
    out.roots |= b.roots;
  }
  std::sort(out.stems.begin(), out.stems.end());
  if (std::adjacent_find(out.stems.begin(), out.stems.end()) != out.stems.end()) {
    throw Error(ErrorCode::InvalidBouquet, "an edge is a stem of two bouquets");
  }
  std::sort(bouquets.begin(), bouquets.end(), min_stem_less);
  out.bouquets = std::move(bouquets);
  out.semi_strongly_disjoint = is_independent(h.edges(), out.roots);
  out.strong_stems = StemChoice(h, out.bouquets).run();
  out.strongly_disjoint = out.strong_stems.has_value();
  return out;
}

BouquetSet bouquets_from_matching(const Hypergraph& h, const EdgeFamily& matching) {
  std::vector<Bouquet> bs;
  for (std::size_t i : matching.edges) {
    const VertexSet e = h.edge(i);
    if (e.size() == 1) continue;  // weight 0, and no proper root exists
    bs.push_back(Bouquet{{i}, VertexSet::singleton(e.min())});
  }
  return classify_bouquet_set(h, std::move(bs));
}

bool bouquet_key_less(const BouquetSet& a, const BouquetSet& b) {
  return key_less(make_key(a.bouquets), make_key(b.bouquets));
}

int strongly_disjoint_number(const Hypergraph& h, const Limits& limits) {
  if (h.is_void()) return 0;
  check_cap(h, limits);
  return StrongSearch(h, false).run();
}

int semi_strongly_disjoint_number(const Hypergraph& h, const Limits& limits) {
  if (h.is_void()) return 0;
  check_cap(h, limits);
  return SemiStrongSearch(h, false).run();
}

BouquetInvariants bouquet_invariants(const Hypergraph& h, const Limits& limits) {
  BouquetInvariants inv;
  inv.d_witness = classify_bouquet_set(h, {});
  inv.d_prime_witness = inv.d_witness;
  if (h.is_void()) return inv;
  check_cap(h, limits);
  StrongSearch strong(h, true);
  inv.d = strong.run();
  inv.d_witness = classify_bouquet_set(h, strong.witness());
  SemiStrongSearch semi(h, true);
  inv.d_prime = semi.run();
  inv.d_prime_witness = classify_bouquet_set(h, semi.witness());
  return inv;
}

CoverConstruction cover_from_bouquets(const Hypergraph& h, const BouquetSet& b,
                                      const Limits& limits) {
  if (!b.semi_strongly_disjoint) {
    throw Error(ErrorCode::NotSemiStronglyDisjoint, "root set " + h.format(b.roots) + " is not independent");
  }
  const int d_prime = semi_strongly_disjoint_number(h, limits);
  if (b.size() != d_prime) {
    throw Error(ErrorCode::NotOptimalWitness, "|F(B)| = " + std::to_string(b.size()) +
                                                   " but d' = " + std::to_string(d_prime));
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (!std::binary_search(b.stems.begin(), b.stems.end(), i)) order.push_back(i);
  }
  order.insert(order.end(), b.stems.begin(), b.stems.end());

  VertexSet picks;
  for (std::size_t i : order) {
    const VertexSet e = h.edge(i);
    if (e.intersects(picks)) continue;
    const VertexSet options = e & b.flowers;
    if (options.empty()) {
      throw Error(ErrorCode::FlowersNotCover, "edge " + h.format(e) + " misses F(B)");
    }
    picks.insert(options.min());
  }
  CoverConstruction out;
  out.greedy_cover = picks;
  out.greedy_was_minimal = is_minimal_vertex_cover(h.edges(), picks);
  if (!out.greedy_was_minimal) {
    const std::vector<VertexId> ids = picks.to_vector();
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
      if (is_vertex_cover(h.edges(), picks.without(*it))) picks.erase(*it);
    }
  }
  out.cover = picks;
  return out;
}

}  // namespace hyperreg
