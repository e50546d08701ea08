#include "hyperreg/complex.hpp"

#include <algorithm>
#include <numeric>

#include "hyperreg/error.hpp"

namespace hyperreg {

SimplicialComplex::SimplicialComplex(VertexSet ground, std::vector<VertexSet> facets)
    : ground_(ground) {
  for (VertexSet f : facets) {
    if (!f.subset_of(ground)) throw Error(ErrorCode::UnknownVertex, "facet outside the ground set");
  }
  facets_ = maximal_elements(std::move(facets));
}

SimplicialComplex SimplicialComplex::void_complex(VertexSet ground) {
  return SimplicialComplex(ground, {});
}

SimplicialComplex SimplicialComplex::empty_face_only(VertexSet ground) {
  return SimplicialComplex(ground, {VertexSet{}});
}

SimplicialComplex SimplicialComplex::simplex(VertexSet ground) {
  return SimplicialComplex(ground, {ground});
}

ComplexKind SimplicialComplex::kind() const {
  if (facets_.empty()) return ComplexKind::Void;
  if (facets_.size() == 1 && facets_[0].empty()) return ComplexKind::EmptyFaceOnly;
  return ComplexKind::Ordinary;
}

bool SimplicialComplex::contains_face(VertexSet f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](VertexSet g) { return f.subset_of(g); });
}

VertexSet SimplicialComplex::support() const {
  VertexSet s;
  for (VertexSet f : facets_) s |= f;
  return s;
}

SimplicialComplex independence_complex(const Hypergraph& h) {
  if (h.is_void()) return SimplicialComplex::void_complex(h.vertex_set());
  return SimplicialComplex(h.vertex_set(), maximal_independent_sets(h.edges(), h.vertex_set()));
}

LinkDeletion link_and_deletion(const SimplicialComplex& d, VertexId x) {
  if (x >= kMaxVertices || !d.ground_set().contains(x)) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(x) + " not in the ground set");
  }
  const VertexSet ground = d.ground_set().without(x);
  std::vector<VertexSet> link_facets;
  std::vector<VertexSet> deletion_facets;
  for (VertexSet f : d.facets()) {
    if (f.contains(x)) link_facets.push_back(f.without(x));
    deletion_facets.push_back(f.without(x));
  }
  return {SimplicialComplex(ground, std::move(link_facets)),
          SimplicialComplex(ground, std::move(deletion_facets))};
}

std::optional<int> dimension(const SimplicialComplex& d) {
  if (d.is_void()) return std::nullopt;
  int best = 0;
  for (VertexSet f : d.facets()) best = std::max(best, f.size());
  return best - 1;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, VertexSet w) {
  if (!w.subset_of(d.ground_set())) {
    throw Error(ErrorCode::UnknownVertex, "restriction set leaves the ground set");
  }
  std::vector<VertexSet> restricted;
  restricted.reserve(d.facets().size());
  for (VertexSet f : d.facets()) restricted.push_back(f & w);
  return SimplicialComplex(w, std::move(restricted));
}

bool is_shedding(const SimplicialComplex& d, VertexId x) {
  if (x >= kMaxVertices || !d.ground_set().contains(x)) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(x) + " not in the ground set");
  }
  // del(x) has F \ {x} as a facet for each facet F ∋ x unless it sits in a
  // facet avoiding x; facets avoiding x carry over unchanged.
  const auto facets = d.facets();
  for (VertexSet f : facets) {
    if (!f.contains(x)) continue;
    const VertexSet rest = f.without(x);
    const bool absorbed = std::any_of(facets.begin(), facets.end(), [rest, x](VertexSet g) {
      return !g.contains(x) && rest.subset_of(g);
    });
    if (!absorbed) return false;
  }
  return true;
}

std::optional<bool> VDMemo::find(const std::vector<std::uint64_t>& key) const {
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void VDMemo::insert(std::vector<std::uint64_t> key, bool verdict) {
  table_.emplace(std::move(key), verdict);
}

std::size_t VDMemo::KeyHash::operator()(const std::vector<std::uint64_t>& key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t k : key) {
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<std::uint64_t> complex_key(const SimplicialComplex& d) {
  const std::vector<VertexId> ground = d.ground_set().to_vector();
  const std::size_t k = ground.size();
  // Degree refinement: (number of facets through v, total size of those facets).
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  order.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t degree = 0;
    std::uint64_t weight = 0;
    for (VertexSet f : d.facets()) {
      if (f.contains(ground[i])) {
        ++degree;
        weight += static_cast<std::uint64_t>(f.size());
      }
    }
    order.emplace_back((degree << 32) | weight, i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<VertexId> relabel(kMaxVertices, 0);
  for (std::size_t r = 0; r < k; ++r) relabel[ground[order[r].second]] = static_cast<VertexId>(r);

  std::vector<std::uint64_t> key;
  key.reserve(d.facets().size() + 1);
  for (VertexSet f : d.facets()) {
    std::uint64_t bits = 0;
    for (VertexId v : f) bits |= std::uint64_t{1} << relabel[v];
    key.push_back(bits);
  }
  std::sort(key.begin(), key.end());
  key.push_back(static_cast<std::uint64_t>(k));
  return key;
}

namespace {

std::optional<VDNode::Kind> base_case(const SimplicialComplex& d) {
  switch (d.kind()) {
    case ComplexKind::Void: return VDNode::Kind::Void;
    case ComplexKind::EmptyFaceOnly: return VDNode::Kind::EmptyFace;
    case ComplexKind::Ordinary: break;
  }
  if (d.is_simplex()) return VDNode::Kind::Simplex;
  return std::nullopt;
}

std::shared_ptr<const VDNode> build_tree(const SimplicialComplex& d, VDMemo& memo) {
  auto node = std::make_shared<VDNode>();
  if (auto base = base_case(d)) {
    node->kind = *base;
    return node;
  }
  for (VertexId x : d.ground_set()) {
    if (!is_shedding(d, x)) continue;
    auto [link, del] = link_and_deletion(d, x);
    if (vertex_decomposable(del, memo) && vertex_decomposable(link, memo)) {
      node->kind = VDNode::Kind::Shedding;
      node->vertex = x;
      node->deletion = build_tree(del, memo);
      node->link = build_tree(link, memo);
      return node;
    }
  }
  return nullptr;
}

SimplicialComplex find_failure(const SimplicialComplex& d, VDMemo& memo) {
  for (VertexId x : d.ground_set()) {
    if (!is_shedding(d, x)) continue;
    auto [link, del] = link_and_deletion(d, x);
    if (!vertex_decomposable(del, memo)) return find_failure(del, memo);
    return find_failure(link, memo);
  }
  return d;
}

bool replay(const SimplicialComplex& d, const VDNode* node) {
  if (node == nullptr) return false;
  if (node->kind != VDNode::Kind::Shedding) {
    auto base = base_case(d);
    return base && *base == node->kind;
  }
  if (!d.ground_set().contains(node->vertex) || !is_shedding(d, node->vertex)) return false;
  auto [link, del] = link_and_deletion(d, node->vertex);
  return replay(del, node->deletion.get()) && replay(link, node->link.get());
}

}  // namespace

bool vertex_decomposable(const SimplicialComplex& d, VDMemo& memo) {
  if (base_case(d)) return true;
  auto key = complex_key(d);
  if (auto hit = memo.find(key)) return *hit;
  bool verdict = false;
  for (VertexId x : d.ground_set()) {
    if (!is_shedding(d, x)) continue;
    auto [link, del] = link_and_deletion(d, x);
    if (vertex_decomposable(del, memo) && vertex_decomposable(link, memo)) {
      verdict = true;
      break;
    }
  }
  memo.insert(std::move(key), verdict);
  return verdict;
}

VDCertificate is_vertex_decomposable(const SimplicialComplex& d, VDMemo& memo) {
  VDCertificate cert;
  cert.verdict = vertex_decomposable(d, memo);
  if (cert.verdict) {
    cert.tree = build_tree(d, memo);
  } else {
    cert.failure_witness = find_failure(d, memo);
  }
  return cert;
}

VDCertificate is_vertex_decomposable(const SimplicialComplex& d) {
  VDMemo memo;
  return is_vertex_decomposable(d, memo);
}

bool verify_certificate(const SimplicialComplex& d, const VDCertificate& cert) {
  if (cert.verdict) return replay(d, cert.tree.get());
  if (!cert.failure_witness) return false;
  const SimplicialComplex& w = *cert.failure_witness;
  if (base_case(w)) return false;
  for (VertexId x : w.ground_set()) {
    if (is_shedding(w, x)) return false;
  }
  return true;
}

}  // namespace hyperreg
