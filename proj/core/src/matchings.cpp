#include "hyperreg/matchings.hpp"

#include <algorithm>
#include <numeric>

#include "hyperreg/error.hpp"

namespace hyperreg {

namespace {

FamilyFlags flags_of(const Hypergraph& h, const std::vector<std::size_t>& members, VertexSet support) {
  FamilyFlags flags;
  flags.matching = true;
  VertexSet seen;
  for (std::size_t i : members) {
    if (h.edge(i).intersects(seen)) flags.matching = false;
    seen |= h.edge(i);
  }
  flags.semi_induced = true;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge(i).subset_of(support) &&
        !std::binary_search(members.begin(), members.end(), i)) {
      flags.semi_induced = false;
      break;
    }
  }
  flags.induced = flags.matching && flags.semi_induced;
  return flags;
}

void check_cap(const Hypergraph& h, const Limits& limits) {
  if (h.num_edges() > limits.matching_edge_cap) {
    throw Error(ErrorCode::SearchLimitExceeded,
                std::to_string(h.num_edges()) + " edges exceed the matching cap " +
                    std::to_string(limits.matching_edge_cap));
  }
}

enum class Mode { Induced, SemiInduced, Matching };

/// Include/exclude search over edges, largest first, pruned by the bound
/// weight + Σ max(0, |E \ U| − 1) over edges still undecided.
class FamilySearch {
 public:
  FamilySearch(const Hypergraph& h, Mode mode, WitnessOrder order)
      : h_(h), mode_(mode), tie_(order), order_(h.num_edges()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&h](std::size_t a, std::size_t b) {
      return h.edge(a).size() > h.edge(b).size();
    });
    state_.assign(h.num_edges(), State::Undecided);
  }

  EdgeFamily run() {
    best_members_.clear();
    best_weight_ = 0;  // the empty family
    dfs(0, VertexSet{}, 0);
    std::vector<std::size_t> members = best_members_;
    return classify_family(h_, members);
  }

 private:
  enum class State { Undecided, In, Out };

  int bound(std::size_t pos, VertexSet u, int k) const {
    int ub = u.size() - k;
    for (std::size_t p = pos; p < order_.size(); ++p) {
      const VertexSet e = h_.edge(order_[p]);
      if (mode_ != Mode::SemiInduced && e.intersects(u)) continue;
      ub += std::max(0, (e - u).size() - 1);
    }
    return ub;
  }

  bool excluded_inside(VertexSet u) const {
    for (std::size_t i = 0; i < state_.size(); ++i) {
      if (state_[i] == State::Out && h_.edge(i).subset_of(u)) return true;
    }
    return false;
  }

  bool outsider_inside(VertexSet u) const {
    for (std::size_t i = 0; i < state_.size(); ++i) {
      if (state_[i] != State::In && h_.edge(i).subset_of(u)) return true;
    }
    return false;
  }

  void offer(VertexSet u, int k) {
    const int w = u.size() - k;
    std::vector<std::size_t> members;
    members.reserve(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < state_.size(); ++i) {
      if (state_[i] == State::In) members.push_back(i);
    }
    bool better = w > best_weight_;
    if (w == best_weight_) {
      if (tie_ == WitnessOrder::FewestEdges && members.size() != best_members_.size()) {
        better = members.size() < best_members_.size();
      } else {
        better = std::lexicographical_compare(members.begin(), members.end(),
                                              best_members_.begin(), best_members_.end());
      }
    }
    if (better) {
      best_weight_ = w;
      best_members_ = std::move(members);
    }
  }

  void dfs(std::size_t pos, VertexSet u, int k) {
    if (bound(pos, u, k) < best_weight_) return;
    if (pos == order_.size()) {
      offer(u, k);
      return;
    }
    const std::size_t idx = order_[pos];
    const VertexSet e = h_.edge(idx);
    switch (mode_) {
      case Mode::Matching:
        if (!e.intersects(u)) {
          state_[idx] = State::In;
          dfs(pos + 1, u | e, k + 1);
        }
        state_[idx] = State::Out;
        dfs(pos + 1, u, k);
        break;
      case Mode::Induced:
        if (!e.intersects(u)) {
          state_[idx] = State::In;
          if (!outsider_inside(u | e)) dfs(pos + 1, u | e, k + 1);
        }
        state_[idx] = State::Out;
        dfs(pos + 1, u, k);
        break;
      case Mode::SemiInduced:
        state_[idx] = State::In;
        if (e.subset_of(u)) {
          dfs(pos + 1, u, k + 1);  // forced
          break;
        }
        if (!excluded_inside(u | e)) dfs(pos + 1, u | e, k + 1);
        state_[idx] = State::Out;
        dfs(pos + 1, u, k);
        break;
    }
    state_[idx] = State::Undecided;
  }

  const Hypergraph& h_;
  Mode mode_;
  WitnessOrder tie_;
  std::vector<std::size_t> order_;
  std::vector<State> state_;
  std::vector<std::size_t> best_members_;
  int best_weight_ = 0;
};

EdgeFamily search(const Hypergraph& h, const Limits& limits, Mode mode, WitnessOrder order) {
  if (h.is_void()) return EdgeFamily{};
  check_cap(h, limits);
  return FamilySearch(h, mode, order).run();
}

}  // namespace

EdgeFamily classify_family(const Hypergraph& h, std::vector<std::size_t> edge_indices) {
  std::sort(edge_indices.begin(), edge_indices.end());
  if (std::adjacent_find(edge_indices.begin(), edge_indices.end()) != edge_indices.end()) {
    throw Error(ErrorCode::UnknownEdge, "edge listed twice in a family");
  }
  EdgeFamily f;
  for (std::size_t i : edge_indices) {
    if (i >= h.num_edges()) throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(i));
    f.support |= h.edge(i);
  }
  f.edges = std::move(edge_indices);
  f.weight = f.support.size() - static_cast<int>(f.edges.size());
  f.flags = flags_of(h, f.edges, f.support);
  return f;
}

EdgeFamily classify_family(const Hypergraph& h, std::span<const VertexSet> edges) {
  std::vector<std::size_t> indices;
  for (VertexSet e : edges) {
    auto idx = h.edge_index(e);
    if (!idx) throw Error(ErrorCode::UnknownEdge, h.format(e) + " is not an edge");
    indices.push_back(*idx);
  }
  return classify_family(h, std::move(indices));
}

EdgeFamily best_induced_matching(const Hypergraph& h, const Limits& limits) {
  return search(h, limits, Mode::Induced, WitnessOrder::LexLeast);
}

EdgeFamily best_semi_induced_matching(const Hypergraph& h, const Limits& limits, WitnessOrder order) {
  return search(h, limits, Mode::SemiInduced, order);
}

EdgeFamily best_matching(const Hypergraph& h, const Limits& limits) {
  return search(h, limits, Mode::Matching, WitnessOrder::LexLeast);
}

MatchingInvariants matching_invariants(const Hypergraph& h, const Limits& limits) {
  MatchingInvariants inv;
  inv.induced_witness = best_induced_matching(h, limits);
  inv.semi_induced_witness = best_semi_induced_matching(h, limits);
  inv.matching_witness = best_matching(h, limits);
  inv.c = inv.induced_witness.weight;
  inv.c_prime = inv.semi_induced_witness.weight;
  inv.m = inv.matching_witness.weight;
  return inv;
}

bool is_two_collage(const Hypergraph& h, std::span<const std::size_t> collage) {
  for (std::size_t i : collage) {
    if (i >= h.num_edges()) throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(i));
  }
  for (VertexSet e : h.edges()) {
    bool fits = false;
    for (VertexId v : e) {
      const VertexSet rest = e.without(v);
      fits = std::any_of(collage.begin(), collage.end(),
                         [&](std::size_t c) { return rest.subset_of(h.edge(c)); });
      if (fits) break;
    }
    if (!fits) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> maximal_matchings(const Hypergraph& h, const Limits& limits) {
  std::vector<std::vector<std::size_t>> out;
  if (h.is_void()) return out;
  check_cap(h, limits);
  std::vector<std::size_t> current;
  auto dfs = [&](auto&& self, std::size_t pos, VertexSet u) -> void {
    if (pos == h.num_edges()) {
      for (VertexSet e : h.edges()) {
        if (!e.intersects(u)) return;
      }
      out.push_back(current);
      return;
    }
    const VertexSet e = h.edge(pos);
    if (!e.intersects(u)) {
      current.push_back(pos);
      self(self, pos + 1, u | e);
      current.pop_back();
    }
    self(self, pos + 1, u);
  };
  dfs(dfs, 0, VertexSet{});
  return out;
}

VertexSet independent_set_from_semi_induced(const Hypergraph& h, const EdgeFamily& family) {
  if (!family.flags.semi_induced) {
    throw Error(ErrorCode::NotSemiInduced, "family is not a semi-induced matching");
  }
  VertexSet picks;
  for (std::size_t i : family.edges) {
    const VertexSet e = h.edge(i);
    if (e.intersects(picks)) continue;
    picks.insert(e.min());
  }
  return family.support - picks;
}

}  // namespace hyperreg
