// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperreg/bouquets.hpp"
#include "hyperreg/complex.hpp"
#include "hyperreg/decomposition.hpp"
#include "hyperreg/generators.hpp"
#include "hyperreg/homological.hpp"
#include "hyperreg/json.hpp"
#include "hyperreg/matchings.hpp"
#include "hyperreg/verification.hpp"

using namespace hyperreg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<VerificationReport> all_reports;

FamilySpec graphs(int n_min, int n, std::vector<std::string> filters = {}) {
  FamilySpec s;
  s.kind = FamilyKind::AllGraphs;
  s.n = n;
  s.n_min = n_min;
  s.filters = std::move(filters);
  return s;
}

FamilySpec randoms(int n_min, int n, int lo, int hi, int e_lo, int e_hi, std::uint64_t count, std::uint64_t seed,
                   std::vector<std::string> filters = {}) {
  FamilySpec s;
  s.kind = FamilyKind::RandomHypergraph;
  s.n = n;
  s.n_min = n_min;
  s.min_edge_size = lo;
  s.max_edge_size = hi;
  s.edge_count = e_lo;
  s.edge_count_max = e_hi;
  s.count = count;
  s.seed = seed;
  s.filters = std::move(filters);
  return s;
}

SuiteOptions suite_options(unsigned jobs = 1) {
  SuiteOptions o;
  o.jobs = jobs;
  return o;
}

const VerificationReport& run(const std::string& suite, const FamilySpec& family, const SuiteOptions& options) {
  all_reports.push_back(run_suite(suite, family, options));
  return all_reports.back();
}

/// Runs a suite over several families; fails on any counterexample or capped instance.
struct SuiteTotals {
  std::uint64_t tested = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t capped = 0;
  std::uint64_t findings = 0;
  std::string first;

  bool clean() const { return counterexamples == 0 && capped == 0; }
  std::string summary() const {
    std::string s = std::to_string(tested) + " tested, " + std::to_string(counterexamples) + " counterexamples";
    if (capped != 0) s += ", " + std::to_string(capped) + " capped";
    if (!first.empty()) s += "; first: " + first;
    return s;
  }
};

SuiteTotals run_all(const std::string& suite, const std::vector<FamilySpec>& families,
                    std::vector<std::uint64_t>* tested_per_family = nullptr,
                    const SuiteOptions& options = suite_options()) {
  SuiteTotals t;
  for (const FamilySpec& f : families) {
    const VerificationReport& r = run(suite, f, options);
    t.tested += r.tested;
    t.counterexamples += r.counterexample_count;
    t.capped += r.skipped_cap;
    t.findings += r.finding_count;
    if (t.first.empty() && !r.counterexamples.empty()) {
      const Counterexample& c = r.counterexamples.front();
      t.first = c.theorem + " " + c.statement + " on " + c.instance.dump();
    }
    if (tested_per_family != nullptr) tested_per_family->push_back(r.tested);
  }
  return t;
}

Outcome expect(bool ok, const std::string& detail) { return {ok, detail}; }

std::string num(std::uint64_t v) { return std::to_string(v); }

// Streams shared by several criteria.
FamilySpec random_small(std::vector<std::string> filters = {}) {
  return randoms(4, 7, 1, 3, 1, 6, 16000, 3, std::move(filters));
}

std::vector<FamilySpec> streams_up_to_8(std::vector<std::string> filters, std::uint64_t seed) {
  return {graphs(1, 6, filters), randoms(4, 8, 2, 4, 1, 6, 5000, seed, filters),
          randoms(7, 8, 2, 3, 3, 8, 2000, seed + 1, filters)};
}

Outcome c1() {
  const Hypergraph h1 = named_instance("H1");
  const Hypergraph star = named_instance("star3");
  const MatchingInvariants a = matching_invariants(h1);
  const MatchingInvariants b = matching_invariants(star);
  const auto dim = dimension(independence_complex(star));
  const bool ok = a.c == 2 && a.c_prime == 3 && b.c_prime == 1 && dim == 2;
  return expect(ok, "H1 c=" + num(a.c) + " c'=" + num(a.c_prime) + "; star c'=" + num(b.c_prime) +
                        " dim=" + (dim ? std::to_string(*dim) : "undefined"));
}

Outcome c2() {
  const Hypergraph h2 = named_instance("H2");
  const Hypergraph c = contraction(h2, h2.vertex("x1"));
  std::vector<std::vector<std::string>> edges;
  for (VertexSet e : c.edges()) edges.push_back(c.label_list(e));
  const bool edges_ok = edges == std::vector<std::vector<std::string>>{{"x2", "x3"}, {"x4", "x5"}};
  const std::vector<VertexSet> contracted{c.vertices_of({"x2", "x3"}), c.vertices_of({"x4", "x5"})};
  const bool semi = classify_family(c, contracted).flags.semi_induced;
  const std::vector<VertexSet> outer{h2.vertices_of({"x1", "x2", "x3"}), h2.vertices_of({"x4", "x5"})};
  const bool outer_semi = classify_family(h2, outer).flags.semi_induced;
  return expect(edges_ok && semi && !outer_semi,
                "H2/x1 edges " + to_json(c)["edges"].dump() + ", semi-induced there: " + (semi ? "yes" : "no") +
                    ", {E1,E3} semi-induced in H2: " + (outer_semi ? "yes" : "no"));
}

Outcome c3() {
  std::vector<std::uint64_t> tested;
  const SuiteTotals t = run_all("theorem-main", {graphs(1, 5, {"c5_free"}),
                                                 random_small({"c5_free", "three_cycle_condition"})},
                                &tested);
  const bool enough = tested[1] >= 10000;
  return expect(t.clean() && enough,
                "graphs " + num(tested[0]) + ", random " + num(tested[1]) + " (need >= 10000); " + t.summary());
}

Outcome c4() {
  const SuiteTotals t = run_all("lemma-codominated", {graphs(1, 5), random_small()});
  return expect(t.clean(), t.summary());
}

Outcome c5() {
  const SuiteTotals t = run_all("graph-cc", {graphs(6, 6)});
  return expect(t.clean() && t.tested == 32768, t.summary());
}

Outcome c6() {
  // dedicated run plus the baseline check inside every other suite run
  const SuiteTotals t = run_all("lemma-dim", {graphs(1, 6), random_small(), randoms(4, 8, 2, 4, 1, 6, 5000, 21)});
  std::uint64_t runs = 0;
  std::uint64_t checked = 0;
  std::uint64_t missing = 0;
  std::uint64_t failures = 0;
  for (const VerificationReport& r : all_reports) {
    ++runs;
    const std::uint64_t evaluated = r.generated - r.filtered_out - r.skipped_cap;
    const auto it = r.checks_run.find("lemma-dim");
    const std::uint64_t ran = it == r.checks_run.end() ? 0 : it->second;
    checked += ran;
    if (ran != evaluated) ++missing;
    for (const Counterexample& c : r.counterexamples) failures += c.theorem == "lemma-dim" ? 1 : 0;
  }
  return expect(t.clean() && missing == 0 && failures == 0,
                "lemma-dim checked on " + num(checked) + " instances across " + num(runs) +
                    " suite runs; runs missing it " + num(missing) + "; " + t.summary());
}

Outcome c7() {
  std::vector<std::uint64_t> tested;
  const SuiteTotals t = run_all("prop-mh",
                                {randoms(5, 8, 2, 2, 1, 10, 3000, 31, {"d_uniform_strong"}),
                                 randoms(5, 8, 3, 3, 2, 5, 12000, 32, {"d_uniform_strong"})},
                                &tested);
  const bool enough = t.tested >= 5000;
  return expect(t.clean() && enough, "d=2 " + num(tested[0]) + ", d=3 " + num(tested[1]) + " (need >= 5000); " +
                                         t.summary());
}

Outcome c8() {
  const SuiteTotals t = run_all("theorem-reg", streams_up_to_8({"c2_free", "c5_free", "vertex_decomposable"}, 41));
  return expect(t.clean() && t.tested > 0, t.summary());
}

Outcome c9() {
  const SuiteTotals t = run_all("theorem-pd", streams_up_to_8({"vertex_decomposable"}, 51));
  return expect(t.clean() && t.tested > 0, t.summary() + ", " + num(t.findings) + " findings");
}

Outcome c10() {
  const SuiteTotals t = run_all("theorem-final", {graphs(1, 6, {"vertex_decomposable"})});
  std::string spots;
  bool spot_ok = true;
  for (const auto& [name, want] : std::vector<std::pair<std::string, int>>{{"star3", 3}, {"P3", 2}, {"C5", 3}}) {
    const Hypergraph h = named_instance(name);
    const int big = minimal_vertex_covers(h).bigheight;
    const int pd = reg_and_pd(h).pd;
    const int dp = bouquet_invariants(h).d_prime;
    spot_ok = spot_ok && big == want && pd == want && dp == want;
    spots += " " + name + " " + num(big) + "=" + num(pd) + "=" + num(dp);
  }
  return expect(t.clean() && t.tested > 0 && spot_ok, t.summary() + ";" + spots);
}

Outcome c11() {
  const SuiteTotals t = run_all("corollary-reg", {graphs(1, 6, {"c5_free", "vertex_decomposable"})});
  return expect(t.clean() && t.tested > 0, t.summary());
}

Outcome c12() {
  const std::vector<std::string> f = {"c5_free", "three_cycle_condition", "vertex_decomposable"};
  FamilySpec seven = graphs(7, 7, f);
  seven.dedup = true;
  SuiteOptions o = suite_options();
  o.check.limits.matching_edge_cap = 21;
  o.check.limits.bouquet_edge_cap = 21;
  o.check.limits.cycle_edge_cap = 21;
  const SuiteTotals t =
      run_all("corollary-codis", {graphs(1, 6, f), seven, randoms(4, 7, 2, 3, 1, 6, 5000, 61, f)}, nullptr, o);
  return expect(t.clean() && t.tested > 0, t.summary());
}

Outcome c13() {
  const SuiteTotals prop = run_all("prop-cd", streams_up_to_8({}, 71));
  const SuiteTotals lem = run_all("lemmas-dprime", streams_up_to_8({}, 81));
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  std::uint64_t missing = 0;
  for (const VerificationReport& r : all_reports) {
    const std::uint64_t evaluated = r.generated - r.filtered_out - r.skipped_cap;
    for (const char* name : {"prop-cd", "lemmas-dprime"}) {
      const auto it = r.checks_run.find(name);
      pairs += it == r.checks_run.end() ? 0 : it->second;
      if (std::string(name) == "prop-cd" && (it == r.checks_run.end() || it->second != evaluated)) ++missing;
    }
    for (const Counterexample& c : r.counterexamples) {
      failures += (c.theorem == "prop-cd" || c.theorem == "lemmas-dprime") ? 1 : 0;
    }
  }
  return expect(prop.clean() && lem.clean() && failures == 0 && missing == 0,
                "prop-cd " + prop.summary() + "; lemmas-dprime " + lem.summary() + "; baseline checks " + num(pairs) +
                    " across " + num(all_reports.size()) + " runs, " + num(failures) + " failures");
}

Outcome c14() {
  const SuiteTotals t = run_all("homology", {graphs(1, 6), randoms(4, 8, 1, 4, 1, 6, 4000, 91),
                                             randoms(9, 10, 2, 4, 2, 8, 300, 92)});
  using Entries = std::map<std::pair<int, int>, std::uint64_t>;
  const std::vector<std::pair<std::string, Entries>> golden = {
      {"single_edge", {{{1, 2}, 1}}},
      {"P3", {{{1, 2}, 2}, {{2, 3}, 1}}},
      {"two_disjoint_edges", {{{1, 2}, 2}, {{2, 4}, 1}}},
      {"star3", {{{1, 2}, 3}, {{2, 3}, 3}, {{3, 4}, 1}}},
      {"C5", {{{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}}},
  };
  std::string bad;
  for (const auto& [name, want] : golden) {
    if (betti_table(named_instance(name)).entries != want) bad += " " + name;
  }
  return expect(t.clean() && bad.empty(), t.summary() + "; golden Betti tables " + (bad.empty() ? "match" : "differ:" + bad));
}

Outcome c15() {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hyperreg_acceptance";
  std::filesystem::create_directories(dir);
  const FamilySpec small = graphs(1, 4);
  std::string bad;
  for (const std::string& suite : theorem_names()) {
    SuiteOptions o;
    o.check.self_test = true;
    const VerificationReport r = run_suite(suite, small, o);
    if (r.exit_status() != 1 || r.counterexamples.empty()) {
      bad += " " + suite + "(no counterexample)";
      continue;
    }
    const Counterexample& c = r.counterexamples.front();
    const std::filesystem::path file = dir / (suite + ".counterexample-0.json");
    std::ofstream(file) << c.to_file_json().dump(2) << "\n";
    const Hypergraph again = load_hypergraph(file.string());
    CheckOptions co;
    co.self_test = true;
    const TheoremCheck rerun = check_theorem(again, c.theorem, co);
    if (rerun.violations.empty()) bad += " " + suite + "(not reproducible)";
  }
  std::string drift;
  const FamilySpec mixed = randoms(4, 7, 1, 3, 1, 6, 1500, 101);
  for (const std::string& suite : theorem_names()) {
    for (const FamilySpec& f : {graphs(1, 5), mixed}) {
      const std::string a = run_suite(suite, f, suite_options(1)).to_json().dump();
      const std::string b = run_suite(suite, f, suite_options(1)).to_json().dump();
      const std::string c = run_suite(suite, f, suite_options(8)).to_json().dump();
      if (a != b || a != c) drift += " " + suite;
    }
  }
  std::filesystem::remove_all(dir);
  return expect(bad.empty() && drift.empty(),
                num(theorem_names().size()) + " suites: self-test" + (bad.empty() ? " fails and reproduces" : bad) +
                    "; reports " + (drift.empty() ? "byte-identical (2 runs, jobs 1 vs 8)" : "differ:" + drift));
}

}  // namespace

int main() {
  // 6 and 13 read the reports of every earlier run
  const std::vector<Criterion> order = {
      {1, "matching invariants of H1 and star", 1, c1},
      {2, "contraction example on H2", 1, c2},
      {3, "shedding == codominated (C5-free, three-cycle)", 300, c3},
      {4, "codominated implies shedding", 300, c4},
      {5, "c == c' on all graphs with 6 vertices", 600, c5},
      {7, "d-uniform strong: c <= c' <= m, 2-collages, c <= reg <= m", 600, c7},
      {8, "reg <= c' <= dim+1 (C2, C5-free, VD)", 600, c8},
      {9, "pd <= d' (VD)", 600, c9},
      {10, "bigheight == pd == d' on VD graphs", 900, c10},
      {11, "reg == c on C5-free VD graphs", 600, c11},
      {12, "codismantlable elimination orders", 600, c12},
      {14, "homology cross-checks and golden Betti tables", 120, c14},
      {15, "self-test and deterministic reports", 600, c15},
      {13, "d' monotonicity and c <= d <= d'", 600, c13},
      {6, "c <= c' <= dim+1 and independent sets from witnesses", 600, c6},
  };
  std::map<int, std::string> lines;
  bool all_pass = true;
  for (const Criterion& c : order) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << (c.id < 10 ? " " : "") << c.id << ": " << c.name << " | "
         << o.detail << " | " << timing << (in_time ? "" : " EXCEEDED");
    lines[c.id] = line.str();
    std::cerr << "done " << c.id << " (" << timing << ")\n";
  }
  for (const auto& [id, line] : lines) std::cout << line << "\n";
  std::cout << (all_pass ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
  return all_pass ? 0 : 1;
}
