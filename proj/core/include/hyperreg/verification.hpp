#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperreg/bouquets.hpp"
#include "hyperreg/complex.hpp"
#include "hyperreg/generators.hpp"
#include "hyperreg/homological.hpp"
#include "hyperreg/hypergraph.hpp"
#include "hyperreg/json.hpp"
#include "hyperreg/limits.hpp"
#include "hyperreg/matchings.hpp"

namespace hyperreg {

struct CheckOptions {
  Field field;
  Limits limits;
  bool skip_homology = false;
  /// Plant a comparator fault so that every evaluated statement fails.
  bool self_test = false;
};

/// Every inequality and equality of a check goes through here, so that the
/// self-test can corrupt all of them at once.
class Comparator {
 public:
  explicit Comparator(bool faulty = false) : faulty_(faulty) {}

  bool le(long a, long b) const { return faulty_ != (a <= b); }
  bool eq(long a, long b) const { return faulty_ != (a == b); }
  bool truth(bool value) const { return faulty_ != value; }

 private:
  bool faulty_;
};

/// Lazily computed quantities of one instance, shared between checks.
class InstanceContext {
 public:
  InstanceContext(Hypergraph h, const CheckOptions& options, VDMemo& memo);

  const Hypergraph& hypergraph() const { return h_; }
  const CheckOptions& options() const { return options_; }
  VDMemo& memo() { return memo_; }

  const SimplicialComplex& complex();
  std::optional<int> dim();
  const MatchingInvariants& matchings();
  int d();
  int d_prime();
  const BouquetInvariants& bouquets();
  const BettiTable& betti();
  const BettiTable& betti(Field field);
  bool vertex_decomposable();
  bool c2_free();
  bool c5_free();
  bool three_cycle_condition();
  bool d_uniform_strong();
  int bigheight();
  VertexSet shedding();
  VertexSet codominated();
  /// Shedding vertices that are vertices of Δ_H ({x} is not an edge).
  VertexSet proper_shedding();

  InstanceContext& deletion(VertexId x);
  InstanceContext& contraction(VertexId x);

 private:
  Hypergraph h_;
  const CheckOptions& options_;
  VDMemo& memo_;
  std::optional<SimplicialComplex> complex_;
  std::optional<MatchingInvariants> matchings_;
  std::optional<int> d_;
  std::optional<int> d_prime_;
  std::optional<BouquetInvariants> bouquets_;
  std::map<std::uint32_t, BettiTable> betti_;
  std::optional<bool> vd_;
  std::optional<bool> c2_free_;
  std::optional<bool> c5_free_;
  std::optional<bool> three_cycle_;
  std::optional<int> bigheight_;
  std::optional<VertexSet> shedding_;
  std::optional<VertexSet> codominated_;
  std::map<VertexId, std::unique_ptr<InstanceContext>> deletions_;
  std::map<VertexId, std::unique_ptr<InstanceContext>> contractions_;
};

struct Violation {
  std::string statement;
  Json values;
};

struct TheoremCheck {
  std::string theorem;
  bool hypotheses_hold = false;
  bool conclusion_holds = true;
  Json details = Json::object();
  std::vector<Violation> violations;
  /// Observations that are recorded but never fail a run.
  std::vector<Json> findings;

  Json to_json() const;
};

/// Suite / theorem names accepted by check_theorem and run_suite.
const std::vector<std::string>& theorem_names();
bool is_theorem_name(const std::string& name);

/// Throws UnknownSuite for an unknown name, and limit errors when a cap is hit.
TheoremCheck check_theorem(InstanceContext& ctx, const std::string& name);
TheoremCheck check_theorem(const Hypergraph& h, const std::string& name, const CheckOptions& options);

/// Checks asserted on every instance of every suite.
const std::vector<std::string>& baseline_theorems();

struct SuiteOptions {
  CheckOptions check;
  unsigned jobs = 1;
  /// Counterexamples kept in full; the count is always exact.
  std::size_t max_counterexamples = 100;
  std::size_t max_findings = 100;
};

struct Counterexample {
  std::uint64_t index = 0;
  Json instance;
  std::string theorem;
  std::string statement;
  Json values;

  /// Instance file that `check --theorem` can re-run directly.
  Json to_file_json() const;
};

struct VerificationReport {
  std::string suite;
  FamilySpec family;
  CheckOptions options;
  std::uint64_t generated = 0;
  std::uint64_t filtered_out = 0;
  std::uint64_t skipped_cap = 0;
  /// Instances on which the suite's own hypotheses held.
  std::uint64_t tested = 0;
  std::map<std::string, std::uint64_t> checks_run;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;
  std::uint64_t finding_count = 0;
  std::vector<Json> findings;
  double elapsed_seconds = 0.0;

  int exit_status() const { return counterexample_count == 0 ? 0 : 1; }
  /// Elapsed time is left out unless asked for, so reports compare bytewise.
  Json to_json(bool include_timing = false) const;
};

/// Throws UnknownSuite, MalformedInput, UnknownFilter; cap errors on single
/// instances are counted in skipped_cap instead.
VerificationReport run_suite(const std::string& suite, const FamilySpec& family, const SuiteOptions& options);

/// Everything the `invariants` command prints. Sections that hit a cap are
/// replaced by {"omitted": reason} and reported through `cap_exceeded`.
struct InvariantReport {
  Json json;
  bool cap_exceeded = false;
  /// Some applicable theorem failed.
  bool violation = false;
};

InvariantReport invariant_report(const Hypergraph& h, const CheckOptions& options);

}  // namespace hyperreg
