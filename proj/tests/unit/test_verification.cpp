#include <gtest/gtest.h>

#include "common.hpp"
#include "hyperreg/error.hpp"
#include "hyperreg/verification.hpp"

using namespace hyperreg;
using namespace testing_support;

namespace {

FamilySpec graphs_up_to(int n) {
  FamilySpec s;
  s.n = n;
  return s;
}

}  // namespace

TEST(Comparator, FaultInverts) {
  const Comparator ok;
  const Comparator bad(true);
  EXPECT_TRUE(ok.le(1, 2));
  EXPECT_FALSE(bad.le(1, 2));
  EXPECT_TRUE(ok.eq(3, 3));
  EXPECT_FALSE(bad.eq(3, 3));
  EXPECT_TRUE(bad.truth(false));
}

TEST(Check, LemmaDimOnH1) {
  const TheoremCheck c = check_theorem(named("H1"), "lemma-dim", {});
  EXPECT_TRUE(c.hypotheses_hold);
  EXPECT_TRUE(c.conclusion_holds);
  EXPECT_TRUE(c.violations.empty());
}

TEST(Check, TheoremMainOnC5) {
  const TheoremCheck c = check_theorem(named("C5"), "theorem-main", {});
  EXPECT_FALSE(c.hypotheses_hold);
  EXPECT_TRUE(c.violations.empty());
}

TEST(Check, TheoremFinalOnStar) {
  const TheoremCheck c = check_theorem(named("star3"), "theorem-final", {});
  EXPECT_TRUE(c.hypotheses_hold);
  EXPECT_TRUE(c.conclusion_holds);
}

TEST(Check, EveryTheoremOnCatalogue) {
  for (const std::string& name : named_instances()) {
    for (const std::string& t : theorem_names()) {
      const TheoremCheck c = check_theorem(named(name), t, {});
      EXPECT_TRUE(c.violations.empty()) << name << " " << t << " " << c.to_json().dump();
    }
  }
}

TEST(Check, SelfTestFails) {
  CheckOptions o;
  o.self_test = true;
  const TheoremCheck c = check_theorem(named("H1"), "lemma-dim", o);
  EXPECT_FALSE(c.conclusion_holds);
  EXPECT_FALSE(c.violations.empty());
}

TEST(Check, UnknownSuite) {
  try {
    check_theorem(named("H1"), "no-such", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSuite);
  }
  EXPECT_FALSE(is_theorem_name("no-such"));
  EXPECT_TRUE(is_theorem_name("theorem-main"));
}

TEST(Suite, TheoremMainSmallGraphs) {
  const VerificationReport r = run_suite("theorem-main", graphs_up_to(4), {});
  EXPECT_EQ(r.generated, 1U + 2U + 8U + 64U);
  EXPECT_EQ(r.counterexample_count, 0U);
  EXPECT_EQ(r.exit_status(), 0);
  EXPECT_GT(r.tested, 0U);
}

TEST(Suite, ReportsAreDeterministicAcrossJobs) {
  SuiteOptions one;
  SuiteOptions four;
  four.jobs = 4;
  const std::string a = run_suite("corollary-reg", graphs_up_to(4), one).to_json().dump();
  const std::string b = run_suite("corollary-reg", graphs_up_to(4), four).to_json().dump();
  EXPECT_EQ(a, b);
}

TEST(Suite, SelfTestProducesCounterexamples) {
  SuiteOptions o;
  o.check.self_test = true;
  const VerificationReport r = run_suite("lemma-dim", graphs_up_to(3), o);
  EXPECT_GT(r.counterexample_count, 0U);
  EXPECT_EQ(r.exit_status(), 1);
  ASSERT_FALSE(r.counterexamples.empty());
  const Json file = r.counterexamples.front().to_file_json();
  EXPECT_TRUE(file.contains("vertices"));
  EXPECT_TRUE(file.contains("counterexample"));
  EXPECT_NO_THROW(hypergraph_from_json(file));
}

TEST(Suite, CapErrorsAreSkipped) {
  SuiteOptions o;
  o.check.limits.betti_vertex_cap = 2;
  const VerificationReport r = run_suite("corollary-reg", graphs_up_to(3), o);
  EXPECT_GT(r.skipped_cap, 0U);
  EXPECT_EQ(r.counterexample_count, 0U);
}

TEST(Suite, UnknownSuite) { EXPECT_THROW(run_suite("no-such", graphs_up_to(2), {}), Error); }

TEST(Report, InvariantsOfH1) {
  const InvariantReport r = invariant_report(named("H1"), {});
  EXPECT_FALSE(r.cap_exceeded);
  EXPECT_FALSE(r.violation);
  const Json& j = r.json;
  EXPECT_EQ(j["matchings"]["c"], 2);
  EXPECT_EQ(j["matchings"]["c_prime"], 3);
  EXPECT_EQ(j["matchings"]["m"], 4);
  EXPECT_EQ(j["bouquets"]["d"], 4);
  EXPECT_EQ(j["bouquets"]["d_prime"], 5);
  EXPECT_EQ(j["homology"]["reg"], 3);
  EXPECT_EQ(j["homology"]["pd"], 2);
  EXPECT_EQ(invariant_report(named("H1"), {}).json.dump(), j.dump());
}

TEST(Report, CapsAreReported) {
  CheckOptions o;
  o.limits.betti_vertex_cap = 3;
  const InvariantReport r = invariant_report(named("H1"), o);
  EXPECT_TRUE(r.cap_exceeded);
  EXPECT_TRUE(r.json["homology"].contains("omitted"));
}
