#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperreg/error.hpp"
#include "hyperreg/generators.hpp"
#include "hyperreg/json.hpp"
#include "hyperreg/verification.hpp"

using namespace hyperreg;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_input = 2;
constexpr int exit_cap = 3;

// only the first few stored counterexamples get their own file
constexpr std::size_t counterexample_files = 10;

struct GlobalFlags {
  std::string field = "q";
  bool skip_homology = false;
  std::size_t edge_cap = 0;
  std::size_t cycle_limit = 0;
};

CheckOptions check_options(const GlobalFlags& g) {
  CheckOptions o;
  o.field = parse_field(g.field);
  o.skip_homology = g.skip_homology;
  if (g.edge_cap != 0) {
    o.limits.matching_edge_cap = g.edge_cap;
    o.limits.bouquet_edge_cap = g.edge_cap;
    o.limits.cycle_edge_cap = g.edge_cap;
  }
  if (g.cycle_limit != 0) o.limits.cycle_length_cap = g.cycle_limit;
  return o;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// --family takes inline JSON or a path to a JSON file
FamilySpec load_family(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_family(arg);
  return parse_family(read_text(arg));
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_invariants(const std::string& path, const GlobalFlags& g) {
  const Hypergraph h = load_hypergraph(path);
  const InvariantReport report = invariant_report(h, check_options(g));
  print(report.json);
  const Json& j = report.json;
  std::cerr << "vertices " << h.num_vertices() << ", edges " << h.num_edges();
  if (j["matchings"].contains("c")) {
    std::cerr << "; c=" << j["matchings"]["c"] << " c'=" << j["matchings"]["c_prime"] << " m=" << j["matchings"]["m"];
  }
  if (j["bouquets"].contains("d")) std::cerr << " d=" << j["bouquets"]["d"] << " d'=" << j["bouquets"]["d_prime"];
  if (j["homology"].contains("reg")) std::cerr << " reg=" << j["homology"]["reg"] << " pd=" << j["homology"]["pd"];
  std::cerr << '\n';
  if (report.cap_exceeded) {
    std::cerr << "some sections were omitted: a search cap was exceeded\n";
    return exit_cap;
  }
  if (report.violation) {
    std::cerr << "an applicable theorem failed on this instance\n";
    return exit_counterexample;
  }
  return exit_ok;
}

int cmd_check(const std::string& path, const std::string& theorem, bool self_test, const GlobalFlags& g) {
  if (!is_theorem_name(theorem)) throw Error(ErrorCode::UnknownSuite, "unknown theorem '" + theorem + "'");
  const Hypergraph h = load_hypergraph(path);
  CheckOptions options = check_options(g);
  options.self_test = self_test;
  const TheoremCheck t = check_theorem(h, theorem, options);
  print(t.to_json());
  if (!t.hypotheses_hold) {
    std::cerr << theorem << ": hypotheses do not hold\n";
    return exit_ok;
  }
  std::cerr << theorem << ": conclusion " << (t.conclusion_holds ? "holds" : "FAILS") << '\n';
  for (const Violation& v : t.violations) std::cerr << "  violated: " << v.statement << '\n';
  return t.conclusion_holds ? exit_ok : exit_counterexample;
}

std::string counterexample_path(const std::string& out, const std::string& suite, std::size_t k) {
  std::string stem = "verify-" + suite;
  if (!out.empty()) {
    stem = out;
    const auto slash = stem.find_last_of('/');
    const auto dot = stem.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) stem.erase(dot);
  }
  return stem + ".counterexample-" + std::to_string(k) + ".json";
}

int cmd_verify(const std::string& suite, const std::string& family_arg, unsigned jobs, const std::string& out,
               bool self_test, const GlobalFlags& g) {
  if (!is_theorem_name(suite)) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + suite + "'");
  SuiteOptions options;
  options.check = check_options(g);
  options.check.self_test = self_test;
  options.jobs = jobs;
  const FamilySpec family = load_family(family_arg);
  const VerificationReport report = run_suite(suite, family, options);

  const std::string text = report.to_json().dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) throw Error(ErrorCode::MalformedInput, "cannot write '" + out + "'");
    file << text;
  }
  for (std::size_t k = 0; k < report.counterexamples.size() && k < counterexample_files; ++k) {
    const std::string path = counterexample_path(out, suite, k);
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::MalformedInput, "cannot write '" + path + "'");
    file << report.counterexamples[k].to_file_json().dump(2) << '\n';
    std::cerr << "counterexample written to " << path << '\n';
  }
  std::cerr << suite << ": generated " << report.generated << ", filtered " << report.filtered_out << ", capped "
            << report.skipped_cap << ", tested " << report.tested << ", counterexamples "
            << report.counterexample_count << ", findings " << report.finding_count << " ("
            << report.elapsed_seconds << " s)\n";
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of simple hypergraphs and a theorem verification driver"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--field", g.field, "Coefficient field: q, f2 or f<p>");
  app.add_flag("--skip-homology", g.skip_homology, "Skip Betti numbers, reg and pd");
  app.add_option("--edge-cap", g.edge_cap, "Edge cap for matching, bouquet and cycle searches");
  app.add_option("--cycle-limit", g.cycle_limit, "Longest Berge cycle searched for");

  std::string path;
  auto* invariants = app.add_subcommand("invariants", "Compute every invariant of one instance");
  invariants->add_option("file", path, "Instance JSON file")->required();
  invariants->fallthrough();

  std::string theorem;
  auto* check = app.add_subcommand("check", "Check one theorem on one instance");
  check->add_option("file", path, "Instance JSON file")->required();
  check->add_option("--theorem", theorem, "Theorem name")->required();
  bool check_self_test = false;
  check->add_flag("--self-test", check_self_test, "Plant a comparator fault");
  check->fallthrough();

  std::string suite, family, out;
  unsigned jobs = 1;
  bool self_test = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over a family");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--family", family, "Family spec: inline JSON or a file")->required();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  verify->add_option("--out", out, "Write the report here instead of stdout");
  verify->add_flag("--self-test", self_test, "Plant a comparator fault");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*invariants) return cmd_invariants(path, g);
    if (*check) return cmd_check(path, theorem, check_self_test, g);
    return cmd_verify(suite, family, jobs, out, self_test, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_limit_error(e.code()) ? exit_cap : exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
}
