#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperreg/hypergraph.hpp"
#include "hyperreg/vertex_set.hpp"

namespace hyperreg {

enum class ComplexKind { Void, EmptyFaceOnly, Ordinary };

/// A simplicial complex stored as its facet antichain over a ground set.
/// Vertex ids refer to a fixed universe, so links and deletions keep the
/// ids of the complex they came from.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Reduces `facets` to its maximal elements. Facets outside the ground
  /// set raise UnknownVertex.
  SimplicialComplex(VertexSet ground, std::vector<VertexSet> facets);

  static SimplicialComplex void_complex(VertexSet ground);
  static SimplicialComplex empty_face_only(VertexSet ground);
  static SimplicialComplex simplex(VertexSet ground);

  VertexSet ground_set() const { return ground_; }
  std::span<const VertexSet> facets() const { return facets_; }
  ComplexKind kind() const;
  bool is_void() const { return facets_.empty(); }
  bool is_simplex() const { return facets_.size() == 1 && facets_[0] == ground_; }
  bool contains_face(VertexSet f) const;
  /// Union of all facets.
  VertexSet support() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  VertexSet ground_;
  std::vector<VertexSet> facets_;
};

SimplicialComplex independence_complex(const Hypergraph& h);

struct LinkDeletion {
  SimplicialComplex link;
  SimplicialComplex deletion;
};

/// Both results live on ground_set() \ {x}. Throws UnknownVertex.
LinkDeletion link_and_deletion(const SimplicialComplex& d, VertexId x);

/// max facet size - 1; nullopt for the void complex.
std::optional<int> dimension(const SimplicialComplex& d);

/// Δ[W]. Throws UnknownVertex unless W ⊆ ground set.
SimplicialComplex induced_subcomplex(const SimplicialComplex& d, VertexSet w);

/// Every facet of del(x) is a facet of the complex. Throws UnknownVertex.
bool is_shedding(const SimplicialComplex& d, VertexId x);

/// One node of a vertex-decomposition tree.
struct VDNode {
  enum class Kind { Simplex, Void, EmptyFace, Shedding };
  Kind kind = Kind::Simplex;
  VertexId vertex = 0;  // meaningful for Shedding only
  std::shared_ptr<const VDNode> deletion;
  std::shared_ptr<const VDNode> link;
};

struct VDCertificate {
  bool verdict = false;
  std::shared_ptr<const VDNode> tree;  // set when verdict is true
  /// For negative verdicts: a descendant complex with no shedding vertex.
  std::optional<SimplicialComplex> failure_witness;
};

/// Memo of verdicts keyed by a relabelled form of the complex. One per
/// worker; it is not synchronised.
class VDMemo {
 public:
  std::optional<bool> find(const std::vector<std::uint64_t>& key) const;
  void insert(std::vector<std::uint64_t> key, bool verdict);
  std::size_t size() const { return table_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const;
  };
  std::unordered_map<std::vector<std::uint64_t>, bool, KeyHash> table_;
};

/// Relabelling-invariant-ish key: vertices reordered by facet degree, facets
/// sorted. Equal keys imply isomorphic complexes.
std::vector<std::uint64_t> complex_key(const SimplicialComplex& d);

VDCertificate is_vertex_decomposable(const SimplicialComplex& d);
VDCertificate is_vertex_decomposable(const SimplicialComplex& d, VDMemo& memo);

/// Verdict only; cheaper than building a certificate.
bool vertex_decomposable(const SimplicialComplex& d, VDMemo& memo);

/// Replays the tree against `d`, re-checking every shedding step and base case.
bool verify_certificate(const SimplicialComplex& d, const VDCertificate& cert);

}  // namespace hyperreg
