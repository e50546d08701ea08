#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperreg/complex.hpp"
#include "hyperreg/hypergraph.hpp"
#include "hyperreg/limits.hpp"

namespace hyperreg {

enum class FamilyKind { AllGraphs, RandomHypergraph, Named };

/// Description of an instance stream. Identical specs give identical streams.
struct FamilySpec {
  FamilyKind kind = FamilyKind::AllGraphs;
  int n = 0;          // largest vertex count
  int n_min = 0;      // 0 means "same as n" for random streams and 1 for graphs
  int min_edge_size = 2;
  int max_edge_size = 2;
  std::optional<int> edge_count;      // lower end of the edge-count range
  std::optional<int> edge_count_max;  // upper end, defaults to edge_count
  std::optional<double> probability;  // per-subset inclusion instead of a count
  std::uint64_t count = 0;            // random streams: number of draws
  std::uint64_t seed = 0;
  std::vector<std::string> names;     // named streams
  std::vector<std::string> filters;
  bool dedup = false;                 // all_graphs: one graph per isomorphism class

  bool operator==(const FamilySpec&) const = default;
};

/// Known filter names.
const std::vector<std::string>& filter_names();

/// Throws UnknownFilter.
void check_filters(const std::vector<std::string>& filters);

/// Per-worker state for filter evaluation.
struct FilterContext {
  Limits limits;
  VDMemo vd_memo;
};

/// Checks ranges, names and filters without building the stream. Throws
/// MalformedInput, UnknownFilter or SizeLimitExceeded.
void validate_family(const FamilySpec& spec);

/// True when h passes every named filter. Throws UnknownFilter.
bool passes_filters(const Hypergraph& h, const std::vector<std::string>& filters, FilterContext& ctx);

/// Labelled graph number `mask` on n vertices: bit i selects the i-th pair
/// in lexicographic pair order.
Hypergraph graph_from_mask(int n, std::uint64_t mask);

/// All 2^(n choose 2) labelled graphs in mask order. Throws
/// SizeLimitExceeded unless 1 <= n <= 7.
std::vector<Hypergraph> enumerate_graphs(int n);

/// Least edge mask over all relabellings (graphs with n <= 7).
std::uint64_t canonical_graph_mask(int n, std::uint64_t mask);

/// One random hypergraph; `index` selects the draw within the stream.
/// Throws Unsatisfiable when the edge count cannot be reached.
Hypergraph random_hypergraph(const FamilySpec& spec, std::uint64_t index = 0);

/// The fixed catalogue behind `named` streams.
const std::vector<std::string>& named_instances();
/// Throws MalformedInput for an unknown name.
Hypergraph named_instance(const std::string& name);

/// Random-access view of a family before filtering.
class InstanceStream {
 public:
  /// Validates the spec (MalformedInput, UnknownFilter, SizeLimitExceeded).
  explicit InstanceStream(FamilySpec spec);

  const FamilySpec& spec() const { return spec_; }
  std::uint64_t size() const { return size_; }
  Hypergraph at(std::uint64_t index) const;

 private:
  FamilySpec spec_;
  std::uint64_t size_ = 0;
  /// all_graphs: (n, mask) per index
  std::vector<std::pair<int, std::uint64_t>> graphs_;
};

}  // namespace hyperreg
