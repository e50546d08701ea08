#include "hyperreg/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "hyperreg/decomposition.hpp"
#include "hyperreg/error.hpp"

namespace hyperreg {

// ---------------------------------------------------------------------------
// InstanceContext

InstanceContext::InstanceContext(Hypergraph h, const CheckOptions& options, VDMemo& memo)
    : h_(std::move(h)), options_(options), memo_(memo) {}

const SimplicialComplex& InstanceContext::complex() {
  if (!complex_) complex_ = independence_complex(h_);
  return *complex_;
}

std::optional<int> InstanceContext::dim() { return dimension(complex()); }

const MatchingInvariants& InstanceContext::matchings() {
  if (!matchings_) matchings_ = matching_invariants(h_, options_.limits);
  return *matchings_;
}

int InstanceContext::d() {
  if (!d_) d_ = bouquets_ ? bouquets_->d : strongly_disjoint_number(h_, options_.limits);
  return *d_;
}

int InstanceContext::d_prime() {
  if (!d_prime_) d_prime_ = bouquets_ ? bouquets_->d_prime : semi_strongly_disjoint_number(h_, options_.limits);
  return *d_prime_;
}

const BouquetInvariants& InstanceContext::bouquets() {
  if (!bouquets_) {
    bouquets_ = bouquet_invariants(h_, options_.limits);
    d_ = bouquets_->d;
    d_prime_ = bouquets_->d_prime;
  }
  return *bouquets_;
}

const BettiTable& InstanceContext::betti() { return betti(options_.field); }

const BettiTable& InstanceContext::betti(Field field) {
  auto it = betti_.find(field.p);
  if (it == betti_.end()) it = betti_.emplace(field.p, betti_table(h_, field, options_.limits)).first;
  return it->second;
}

bool InstanceContext::vertex_decomposable() {
  if (!vd_) vd_ = hyperreg::vertex_decomposable(complex(), memo_);
  return *vd_;
}

bool InstanceContext::c2_free() {
  if (!c2_free_) c2_free_ = !find_cycle(h_, 2, options_.limits).has_value();
  return *c2_free_;
}

bool InstanceContext::c5_free() {
  if (!c5_free_) c5_free_ = !find_cycle(h_, 5, options_.limits).has_value();
  return *c5_free_;
}

bool InstanceContext::three_cycle_condition() {
  if (!three_cycle_) three_cycle_ = three_cycle_edge_condition(h_, options_.limits);
  return *three_cycle_;
}

bool InstanceContext::d_uniform_strong() {
  return !h_.is_void() && !h_.is_edgeless() && uniformity_profile(h_).strong_intersection;
}

int InstanceContext::bigheight() {
  if (!bigheight_) bigheight_ = minimal_vertex_covers(h_).bigheight;
  return *bigheight_;
}

VertexSet InstanceContext::shedding() {
  if (!shedding_) {
    VertexSet out;
    for (VertexId v : h_.vertex_set()) {
      if (is_shedding(complex(), v)) out.insert(v);
    }
    shedding_ = out;
  }
  return *shedding_;
}

VertexSet InstanceContext::codominated() {
  if (!codominated_) codominated_ = codominated_vertices(h_);
  return *codominated_;
}

VertexSet InstanceContext::proper_shedding() {
  VertexSet out = shedding();
  for (VertexSet e : h_.edges()) {
    if (e.size() == 1) out -= e;
  }
  return out;
}

InstanceContext& InstanceContext::deletion(VertexId x) {
  auto& slot = deletions_[x];
  if (!slot) slot = std::make_unique<InstanceContext>(hyperreg::deletion(h_, x), options_, memo_);
  return *slot;
}

InstanceContext& InstanceContext::contraction(VertexId x) {
  auto& slot = contractions_[x];
  if (!slot) slot = std::make_unique<InstanceContext>(hyperreg::contraction(h_, x), options_, memo_);
  return *slot;
}

// ---------------------------------------------------------------------------
// Theorem checks

Json TheoremCheck::to_json() const {
  Json j;
  j["theorem"] = theorem;
  j["hypotheses_hold"] = hypotheses_hold;
  j["conclusion_holds"] = hypotheses_hold ? Json(conclusion_holds) : Json(nullptr);
  j["details"] = details;
  if (!violations.empty()) {
    j["violations"] = Json::array();
    for (const Violation& v : violations) j["violations"].push_back({{"statement", v.statement}, {"values", v.values}});
  }
  if (!findings.empty()) j["findings"] = findings;
  return j;
}

namespace {

class Recorder {
 public:
  Recorder(TheoremCheck& t, const Comparator& cmp) : t_(t), cmp_(cmp) {}

  const Comparator& cmp() const { return cmp_; }

  void require(const std::string& statement, bool holds, Json values) {
    if (holds) return;
    t_.conclusion_holds = false;
    t_.violations.push_back({statement, std::move(values)});
  }

  void le(const std::string& statement, long a, long b, Json values) { require(statement, cmp_.le(a, b), std::move(values)); }
  void eq(const std::string& statement, long a, long b, Json values) { require(statement, cmp_.eq(a, b), std::move(values)); }
  void truth(const std::string& statement, bool value, Json values) {
    require(statement, cmp_.truth(value), std::move(values));
  }

 private:
  TheoremCheck& t_;
  const Comparator& cmp_;
};

Json labels(const Hypergraph& h, VertexSet s) { return labels_json(h, s); }

bool homology_on(InstanceContext& ctx) { return !ctx.options().skip_homology; }

/// reg/pd of a sub-instance; nullopt for the void marker (R/I is zero).
std::optional<RegPd> sub_reg_pd(InstanceContext& sub) {
  if (sub.hypergraph().is_void()) return std::nullopt;
  return RegPd{sub.betti().reg(), sub.betti().pd()};
}

void lemma_dim(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  t.hypotheses_hold = !h.is_void();
  if (!t.hypotheses_hold) return;
  const MatchingInvariants& mi = ctx.matchings();
  const int top = *ctx.dim() + 1;
  t.details = {{"c", mi.c}, {"c_prime", mi.c_prime}, {"dim_plus_one", top}};
  r.le("c <= c'", mi.c, mi.c_prime, t.details);
  r.le("c' <= dim(Delta)+1", mi.c_prime, top, t.details);
  const EdgeFamily fewest = best_semi_induced_matching(h, ctx.options().limits, WitnessOrder::FewestEdges);
  for (const EdgeFamily* w : {&mi.semi_induced_witness, &fewest}) {
    const VertexSet ind = independent_set_from_semi_induced(h, *w);
    const bool ok = is_independent(h.edges(), ind) && ind.size() >= w->weight && ind.subset_of(w->support);
    r.truth("semi-induced witness yields an independent set of size >= weight", ok,
            {{"witness", to_json(h, *w)}, {"independent_set", labels(h, ind)}, {"weight", w->weight}});
  }
}

void theorem_main(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  const bool c5 = ctx.c5_free();
  const bool three = ctx.three_cycle_condition();
  t.details = {{"c5_free", c5}, {"three_cycle_condition", three}};
  t.hypotheses_hold = !h.is_void() && c5 && three;
  if (!t.hypotheses_hold) return;
  const VertexSet sh = ctx.shedding();
  const VertexSet cod = ctx.codominated();
  t.details["shedding"] = labels(h, sh);
  t.details["codominated"] = labels(h, cod);
  r.truth("shedding vertices == codominated vertices", sh == cod,
          {{"shedding", labels(h, sh)}, {"codominated", labels(h, cod)}});
}

void lemma_codominated(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  t.hypotheses_hold = !h.is_void();
  if (!t.hypotheses_hold) return;
  const VertexSet sh = ctx.shedding();
  const VertexSet cod = ctx.codominated();
  t.details = {{"shedding", labels(h, sh)}, {"codominated", labels(h, cod)}};
  r.truth("codominated vertices are shedding", cod.subset_of(sh), t.details);
}

void graph_cc(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  t.hypotheses_hold = !h.is_void() && h.is_graph();
  if (!t.hypotheses_hold) return;
  const MatchingInvariants& mi = ctx.matchings();
  t.details = {{"c", mi.c}, {"c_prime", mi.c_prime}};
  r.eq("c == c'", mi.c, mi.c_prime, t.details);
}

void prop_mh(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  t.hypotheses_hold = ctx.d_uniform_strong();
  if (!t.hypotheses_hold) return;
  const MatchingInvariants& mi = ctx.matchings();
  t.details = {{"d", *uniformity_profile(h).d}, {"c", mi.c}, {"c_prime", mi.c_prime}, {"m", mi.m}};
  r.le("c <= c'", mi.c, mi.c_prime, t.details);
  r.le("c' <= m", mi.c_prime, mi.m, t.details);
  Json bad = Json::array();
  std::size_t count = 0;
  for (const auto& mm : maximal_matchings(h, ctx.options().limits)) {
    ++count;
    if (!is_two_collage(h, mm)) bad.push_back(to_json(h, classify_family(h, mm)));
  }
  t.details["maximal_matchings"] = count;
  r.truth("every maximal matching is a 2-collage", bad.empty(), {{"not_collages", bad}});
  if (homology_on(ctx)) {
    const int reg = ctx.betti().reg();
    t.details["reg"] = reg;
    r.le("c <= reg", mi.c, reg, t.details);
    r.le("reg <= m", reg, mi.m, t.details);
  }
}

void theorem_reg(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  if (h.is_void()) return;
  const bool c2 = ctx.c2_free();
  const bool c5 = ctx.c5_free();
  const bool vd = ctx.vertex_decomposable();
  t.details = {{"c2_free", c2}, {"c5_free", c5}, {"vertex_decomposable", vd}};
  t.hypotheses_hold = c2 && c5 && vd;
  if (!t.hypotheses_hold) return;
  const MatchingInvariants& mi = ctx.matchings();
  const int top = *ctx.dim() + 1;
  t.details["c_prime"] = mi.c_prime;
  t.details["dim_plus_one"] = top;
  if (homology_on(ctx)) {
    const int reg = ctx.betti().reg();
    t.details["reg"] = reg;
    r.le("reg <= c'", reg, mi.c_prime, t.details);
  }
  r.le("c' <= dim(Delta)+1", mi.c_prime, top, t.details);
}

void theorem_pd(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  if (h.is_void()) return;
  const bool vd = ctx.vertex_decomposable();
  t.details = {{"vertex_decomposable", vd}};
  t.hypotheses_hold = vd;
  if (!vd) return;
  const int dp = ctx.d_prime();
  t.details["d_prime"] = dp;
  if (homology_on(ctx)) {
    const int pd = ctx.betti().pd();
    t.details["pd"] = pd;
    r.le("pd <= d'", pd, dp, t.details);
  }
}

void theorem_final(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  t.hypotheses_hold = !h.is_void();
  if (!t.hypotheses_hold) return;
  const BouquetInvariants& bi = ctx.bouquets();
  const BouquetSet& b = bi.d_prime_witness;
  const bool two_stems = std::all_of(b.stems.begin(), b.stems.end(),
                                     [&](std::size_t i) { return h.edge(i).size() == 2; });
  const bool vd = ctx.vertex_decomposable();
  t.details = {{"d_prime", bi.d_prime}, {"witness", to_json(h, b)}, {"flowers", labels(h, b.flowers)},
               {"stems_have_size_two", two_stems}, {"vertex_decomposable", vd}};

  // (i)
  Json part_i = {{"applies", true}};
  try {
    const CoverConstruction cc = cover_from_bouquets(h, b, ctx.options().limits);
    part_i["cover"] = labels(h, cc.cover);
    part_i["greedy_was_minimal"] = cc.greedy_was_minimal;
    const bool ok = is_minimal_vertex_cover(h.edges(), cc.cover) && cc.cover.subset_of(b.flowers);
    r.truth("(i) a minimal vertex cover lies inside F(B)", ok, {{"cover", labels(h, cc.cover)}, {"flowers", labels(h, b.flowers)}});
  } catch (const Error& e) {
    if (is_limit_error(e.code())) throw;
    part_i["error"] = e.what();
    r.require("(i) a minimal vertex cover lies inside F(B)", r.cmp().truth(false),
              {{"error", e.what()}, {"flowers", labels(h, b.flowers)}});
  }
  t.details["part_i"] = part_i;

  // (ii)
  Json part_ii = {{"applies", two_stems}};
  if (two_stems) {
    const int c = ctx.matchings().c;
    const int big = ctx.bigheight();
    part_ii["c"] = c;
    part_ii["d"] = bi.d;
    part_ii["d_prime"] = bi.d_prime;
    part_ii["bigheight"] = big;
    r.truth("(ii) F(B) is a minimal vertex cover", is_minimal_vertex_cover(h.edges(), b.flowers),
            {{"flowers", labels(h, b.flowers)}});
    r.le("(ii) c <= d", c, bi.d, part_ii);
    r.le("(ii) d <= d'", bi.d, bi.d_prime, part_ii);
    r.le("(ii) d' <= bigheight", bi.d_prime, big, part_ii);
    if (homology_on(ctx)) {
      part_ii["pd"] = ctx.betti().pd();
      r.le("(ii) bigheight <= pd", big, ctx.betti().pd(), part_ii);
    }
  }
  t.details["part_ii"] = part_ii;

  // (iii)
  Json part_iii = {{"applies", two_stems && vd}};
  if (two_stems && vd) {
    const int big = ctx.bigheight();
    part_iii["bigheight"] = big;
    part_iii["d_prime"] = bi.d_prime;
    if (homology_on(ctx)) {
      const int pd = ctx.betti().pd();
      part_iii["pd"] = pd;
      r.eq("(iii) bigheight == pd", big, pd, part_iii);
      r.eq("(iii) pd == d'", pd, bi.d_prime, part_iii);
    } else {
      r.eq("(iii) bigheight == d'", big, bi.d_prime, part_iii);
    }
  }
  t.details["part_iii"] = part_iii;
}

void corollary_reg(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  if (h.is_void()) return;
  const bool c2 = ctx.c2_free();
  const bool c5 = ctx.c5_free();
  const bool vd = ctx.vertex_decomposable();
  const bool uniform = ctx.d_uniform_strong();
  const MatchingInvariants& mi = ctx.matchings();
  const int top = *ctx.dim() + 1;
  const bool base = c2 && c5 && vd;
  const bool p1 = base && mi.c == top;
  const bool p2 = base && mi.c == mi.c_prime;
  const bool p3 = h.is_graph() && c5 && vd;
  const bool p4 = uniform && mi.c == mi.m;
  const bool p5 = base;
  t.details = {{"c", mi.c}, {"c_prime", mi.c_prime}, {"m", mi.m}, {"dim_plus_one", top},
               {"applies", {{"i", p1}, {"ii", p2}, {"iii", p3}, {"iv", p4}, {"bounds", p5}}}};
  t.hypotheses_hold = p1 || p2 || p3 || p4 || p5;
  if (!t.hypotheses_hold || !homology_on(ctx)) return;
  const int reg = ctx.betti().reg();
  t.details["reg"] = reg;
  if (p1) {
    r.eq("(i) reg == c", reg, mi.c, t.details);
    r.eq("(i) c == c'", mi.c, mi.c_prime, t.details);
    r.eq("(i) c' == dim(Delta)+1", mi.c_prime, top, t.details);
  }
  if (p2) r.eq("(ii) reg == c", reg, mi.c, t.details);
  if (p3) r.eq("(iii) reg == c", reg, mi.c, t.details);
  if (p4) {
    r.eq("(iv) reg == c", reg, mi.c, t.details);
    r.eq("(iv) c == c'", mi.c, mi.c_prime, t.details);
    r.eq("(iv) c' == m", mi.c_prime, mi.m, t.details);
  }
  if (p5) {
    const int dp = ctx.d_prime();
    t.details["d_prime"] = dp;
    r.le("c <= reg", mi.c, reg, t.details);
    r.le("reg <= c'", reg, mi.c_prime, t.details);
    r.le("c' <= d'", mi.c_prime, dp, t.details);
    if (mi.c == dp) r.eq("c == d' implies reg == c", reg, mi.c, t.details);
  }
}

void prop_cd(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  t.hypotheses_hold = !h.is_void();
  if (!t.hypotheses_hold) return;
  const MatchingInvariants& mi = ctx.matchings();
  const int d = ctx.d();
  const int dp = ctx.d_prime();
  const bool c2 = ctx.c2_free();
  t.details = {{"c", mi.c}, {"c_prime", mi.c_prime}, {"d", d}, {"d_prime", dp}, {"c2_free", c2}};
  r.le("c <= d", mi.c, d, t.details);
  r.le("d <= d'", d, dp, t.details);
  if (c2) r.le("c' <= d' (C2-free)", mi.c_prime, dp, t.details);
  const BouquetSet from_matching = bouquets_from_matching(h, mi.induced_witness);
  r.truth("an induced matching is a strongly disjoint bouquet set with |F| = c",
          from_matching.strongly_disjoint && from_matching.size() == mi.c,
          {{"bouquets", to_json(h, from_matching)}, {"c", mi.c}});
  r.truth("a strongly disjoint bouquet set is semi-strongly disjoint",
          from_matching.semi_strongly_disjoint, {{"bouquets", to_json(h, from_matching)}});
}

void lemmas_dprime(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  if (h.is_void()) return;
  const VertexSet sh = ctx.proper_shedding();
  t.details = {{"shedding", labels(h, sh)}};
  t.hypotheses_hold = !sh.empty();
  if (!t.hypotheses_hold) return;
  const int dp = ctx.d_prime();
  t.details["d_prime"] = dp;
  for (VertexId x : sh) {
    const int contracted = ctx.contraction(x).d_prime();
    const int deleted = ctx.deletion(x).d_prime();
    const Json values = {{"x", h.label(x)}, {"d_prime", dp}, {"d_prime_contraction", contracted},
                         {"d_prime_deletion", deleted}};
    r.le("d'(H/x) <= d'(H)", contracted, dp, values);
    r.le("d'(H\\x) + 1 <= d'(H)", deleted + 1, dp, values);
  }
}

void corollary_codis(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  if (h.is_void()) return;
  const bool c5 = ctx.c5_free();
  const bool three = ctx.three_cycle_condition();
  const bool vd = ctx.vertex_decomposable();
  t.details = {{"c5_free", c5}, {"three_cycle_condition", three}, {"vertex_decomposable", vd}};
  t.hypotheses_hold = c5 && three && vd;
  if (!t.hypotheses_hold) return;
  const auto order = is_codismantlable(h);
  Json order_json = nullptr;
  if (order) {
    order_json = Json::array();
    for (VertexId v : order->order) order_json.push_back(h.label(v));
  }
  t.details["order"] = order_json;
  r.truth("H is codismantlable with a replay-valid order", order.has_value() && order->valid,
          {{"order", order_json}});
}

void recursion_pd(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  if (h.is_void() || !homology_on(ctx)) return;
  // only shedding vertices that drive a vertex decomposition qualify
  VertexSet sh;
  if (ctx.vertex_decomposable()) {
    for (VertexId x : ctx.proper_shedding()) {
      if (ctx.deletion(x).vertex_decomposable() && ctx.contraction(x).vertex_decomposable()) sh.insert(x);
    }
  }
  t.details = {{"decomposition_shedding", labels(h, sh)}};
  t.hypotheses_hold = !sh.empty();
  if (!t.hypotheses_hold) return;
  const int pd = ctx.betti().pd();
  t.details["pd"] = pd;
  for (VertexId x : sh) {
    const int del = ctx.deletion(x).betti().pd();
    const auto link = sub_reg_pd(ctx.contraction(x));
    const int rhs = std::max(del + 1, link ? link->pd : 0);
    r.eq("pd(H) == max(pd(H\\x)+1, pd(H/x))", pd, rhs,
         {{"x", h.label(x)}, {"pd", pd}, {"pd_deletion", del}, {"pd_contraction", link ? Json(link->pd) : Json(nullptr)}});
  }
}

void recursion_reg(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  if (h.is_void() || !homology_on(ctx)) return;
  const VertexSet sh = ctx.proper_shedding();
  t.details = {{"shedding", labels(h, sh)}};
  t.hypotheses_hold = !sh.empty();
  if (!t.hypotheses_hold) return;
  const int reg = ctx.betti().reg();
  t.details["reg"] = reg;
  for (VertexId x : sh) {
    const int del = ctx.deletion(x).betti().reg();
    const auto link = sub_reg_pd(ctx.contraction(x));
    const int rhs = std::max(del, link ? link->reg + 1 : 0);
    r.le("reg(H) <= max(reg(H\\x), reg(H/x)+1)", reg, rhs,
         {{"x", h.label(x)}, {"reg", reg}, {"reg_deletion", del}, {"reg_contraction", link ? Json(link->reg) : Json(nullptr)}});
  }
}

void homology(InstanceContext& ctx, TheoremCheck& t, Recorder& r) {
  const Hypergraph& h = ctx.hypergraph();
  t.hypotheses_hold = !h.is_void() && homology_on(ctx);
  if (!t.hypotheses_hold) return;
  const BettiTable& table = ctx.betti();
  t.details = {{"betti", to_json(table)}};

  std::map<int, std::uint64_t> sizes;
  for (VertexSet e : h.edges()) ++sizes[e.size()];
  std::map<int, std::uint64_t> first_row;
  for (const auto& [ij, rank] : table.entries) {
    if (ij.first == 1) first_row[ij.second] = rank;
  }
  Json sizes_json = Json::object();
  for (const auto& [j, k] : sizes) sizes_json[std::to_string(j)] = k;
  Json row_json = Json::object();
  for (const auto& [j, k] : first_row) row_json[std::to_string(j)] = k;
  r.truth("beta_{1,j} counts edges of size j", sizes == first_row,
          {{"edge_sizes", sizes_json}, {"beta_1", row_json}});

  if (h.num_vertices() <= 10 && !h.is_edgeless()) {
    const SimplicialComplex dual = alexander_dual(ctx.complex(), ctx.options().limits);
    const BettiTable dual_table = betti_table(dual, ctx.options().field, ctx.options().limits);
    const Json values = {{"pd", table.pd()}, {"dual_reg", dual_table.reg()}};
    t.details["dual_reg"] = dual_table.reg();
    r.eq("pd(R/I) == reg(R/I_dual) + 1", table.pd(), dual_table.reg() + 1, values);
  }
  const int big = ctx.bigheight();
  const int c = ctx.matchings().c;
  t.details["bigheight"] = big;
  t.details["c"] = c;
  r.le("bigheight <= pd", big, table.pd(), {{"bigheight", big}, {"pd", table.pd()}});
  r.le("c <= reg", c, table.reg(), {{"c", c}, {"reg", table.reg()}});

  if (ctx.vertex_decomposable()) {
    const Field other = ctx.options().field.p == 2 ? Field::rationals() : Field{2};
    const BettiTable& alt = ctx.betti(other);
    if (alt.entries != table.entries) {
      t.findings.push_back({{"finding", "Betti tables differ between fields"},
                            {"tables", Json::array({to_json(table), to_json(alt)})}});
    }
  }
}

using CheckFn = void (*)(InstanceContext&, TheoremCheck&, Recorder&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"theorem-main", theorem_main},   {"lemma-codominated", lemma_codominated},
      {"lemma-dim", lemma_dim},         {"graph-cc", graph_cc},
      {"prop-mh", prop_mh},             {"theorem-reg", theorem_reg},
      {"theorem-pd", theorem_pd},       {"theorem-final", theorem_final},
      {"corollary-reg", corollary_reg}, {"prop-cd", prop_cd},
      {"lemmas-dprime", lemmas_dprime}, {"corollary-codis", corollary_codis},
      {"recursion-pd", recursion_pd},   {"recursion-reg", recursion_reg},
      {"homology", homology},
  };
  return table;
}

CheckFn lookup(const std::string& name) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn;
  }
  throw Error(ErrorCode::UnknownSuite, "unknown theorem or suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

bool is_theorem_name(const std::string& name) {
  return std::find(theorem_names().begin(), theorem_names().end(), name) != theorem_names().end();
}

const std::vector<std::string>& baseline_theorems() {
  static const std::vector<std::string> names = {"lemma-dim", "prop-cd", "lemmas-dprime"};
  return names;
}

TheoremCheck check_theorem(InstanceContext& ctx, const std::string& name) {
  const CheckFn fn = lookup(name);
  TheoremCheck t;
  t.theorem = name;
  const Comparator cmp(ctx.options().self_test);
  Recorder r(t, cmp);
  fn(ctx, t, r);
  // bouquets need a nonempty proper root, so one-vertex edges are out of scope
  if ((name == "theorem-pd" || name == "theorem-final") && ctx.hypergraph().has_singleton_edge()) {
    t.details["singleton_edges"] = true;
    for (const Violation& v : t.violations) {
      t.findings.push_back({{"finding", "fails on a hypergraph with one-vertex edges"},
                            {"statement", v.statement}, {"values", v.values}});
    }
    t.hypotheses_hold = false;
  }
  if (!t.hypotheses_hold) {
    t.conclusion_holds = true;
    t.violations.clear();
  }
  return t;
}

TheoremCheck check_theorem(const Hypergraph& h, const std::string& name, const CheckOptions& options) {
  VDMemo memo;
  InstanceContext ctx(h, options, memo);
  return check_theorem(ctx, name);
}

// ---------------------------------------------------------------------------
// Suites

Json Counterexample::to_file_json() const {
  Json j = instance;
  j["counterexample"] = {{"index", index}, {"theorem", theorem}, {"statement", statement}, {"values", values}};
  return j;
}

Json VerificationReport::to_json(bool include_timing) const {
  Json j;
  j["suite"] = suite;
  j["family"] = hyperreg::to_json(family);
  j["field"] = options.field.name();
  j["skip_homology"] = options.skip_homology;
  j["self_test"] = options.self_test;
  j["generated"] = generated;
  j["filtered_out"] = filtered_out;
  j["skipped_cap"] = skipped_cap;
  j["tested"] = tested;
  j["checks_run"] = Json::object();
  for (const auto& [name, count] : checks_run) j["checks_run"][name] = count;
  j["counterexample_count"] = counterexample_count;
  j["counterexamples"] = Json::array();
  for (const Counterexample& c : counterexamples) {
    j["counterexamples"].push_back({{"index", c.index}, {"theorem", c.theorem}, {"statement", c.statement},
                                    {"values", c.values}, {"instance", c.instance}});
  }
  j["finding_count"] = finding_count;
  j["findings"] = findings;
  if (include_timing) j["elapsed_seconds"] = elapsed_seconds;
  j["exit_status"] = exit_status();
  return j;
}

namespace {

struct Outcome {
  bool filtered = false;
  bool capped = false;
  bool suite_hypotheses = false;
  std::vector<std::string> ran;
  std::vector<Counterexample> counterexamples;
  std::vector<Json> findings;
};

Outcome evaluate(const InstanceStream& stream, std::uint64_t index, const std::vector<std::string>& names,
                 const CheckOptions& options, FilterContext& filter_ctx) {
  Outcome out;
  const Hypergraph h = stream.at(index);
  try {
    if (!passes_filters(h, stream.spec().filters, filter_ctx)) {
      out.filtered = true;
      return out;
    }
    InstanceContext ctx(h, options, filter_ctx.vd_memo);
    std::vector<TheoremCheck> checks;
    for (const std::string& name : names) checks.push_back(check_theorem(ctx, name));
    const Json instance = to_json(h);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const TheoremCheck& t = checks[k];
      if (k == 0) out.suite_hypotheses = t.hypotheses_hold;
      if (t.hypotheses_hold) out.ran.push_back(t.theorem);
      for (const Violation& v : t.violations) {
        out.counterexamples.push_back({index, instance, t.theorem, v.statement, v.values});
      }
      for (const Json& f : t.findings) {
        out.findings.push_back({{"index", index}, {"theorem", t.theorem}, {"instance", instance}, {"detail", f}});
      }
    }
  } catch (const Error& e) {
    if (!is_limit_error(e.code())) throw;
    out = Outcome{};
    out.capped = true;
  }
  return out;
}

}  // namespace

VerificationReport run_suite(const std::string& suite, const FamilySpec& family, const SuiteOptions& options) {
  if (!is_theorem_name(suite)) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  const InstanceStream stream(family);

  std::vector<std::string> names = {suite};
  for (const std::string& b : baseline_theorems()) {
    if (b != suite) names.push_back(b);
  }

  VerificationReport report;
  report.suite = suite;
  report.family = family;
  report.options = options.check;
  report.generated = stream.size();
  for (const std::string& n : names) report.checks_run[n] = 0;

  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<FilterContext> contexts(jobs);
  for (FilterContext& fc : contexts) fc.limits = options.check.limits;

  const std::uint64_t block = 64ULL * jobs;
  for (std::uint64_t base = 0; base < stream.size(); base += block) {
    const std::uint64_t end = std::min(stream.size(), base + block);
    std::vector<Outcome> outcomes(end - base);
    std::vector<std::exception_ptr> errors(end - base);
    std::atomic<std::uint64_t> next{base};
    auto work = [&](unsigned w) {
      for (std::uint64_t i = next++; i < end; i = next++) {
        try {
          outcomes[i - base] = evaluate(stream, i, names, options.check, contexts[w]);
        } catch (...) {
          errors[i - base] = std::current_exception();
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    }
    for (std::uint64_t k = 0; k < outcomes.size(); ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      Outcome& o = outcomes[k];
      if (o.filtered) {
        ++report.filtered_out;
        continue;
      }
      if (o.capped) {
        ++report.skipped_cap;
        continue;
      }
      if (o.suite_hypotheses) ++report.tested;
      for (const std::string& n : o.ran) ++report.checks_run[n];
      for (Counterexample& c : o.counterexamples) {
        ++report.counterexample_count;
        if (report.counterexamples.size() < options.max_counterexamples) report.counterexamples.push_back(std::move(c));
      }
      for (Json& f : o.findings) {
        ++report.finding_count;
        if (report.findings.size() < options.max_findings) report.findings.push_back(std::move(f));
      }
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Invariant report

InvariantReport invariant_report(const Hypergraph& h, const CheckOptions& options) {
  InvariantReport out;
  VDMemo memo;
  InstanceContext ctx(h, options, memo);
  Json& j = out.json;
  j["instance"] = to_json(h);

  auto section = [&](const char* key, const std::function<Json()>& fill) {
    try {
      j[key] = fill();
    } catch (const Error& e) {
      if (!is_limit_error(e.code())) throw;
      out.cap_exceeded = true;
      j[key] = {{"omitted", e.what()}};
    }
  };

  section("structure", [&] {
    Json s;
    s["num_vertices"] = h.num_vertices();
    s["num_edges"] = h.num_edges();
    s["is_graph"] = h.is_graph();
    s["c2_free"] = ctx.c2_free();
    s["c5_free"] = ctx.c5_free();
    s["three_cycle_condition"] = ctx.three_cycle_condition();
    if (h.is_edgeless()) {
      s["uniformity"] = nullptr;
    } else {
      const UniformityProfile u = uniformity_profile(h);
      s["uniformity"] = {{"d", u.d ? Json(*u.d) : Json(nullptr)}, {"strong_intersection", u.strong_intersection}};
    }
    return s;
  });
  section("matchings", [&] {
    const MatchingInvariants& mi = ctx.matchings();
    return Json{{"c", mi.c},
                {"c_prime", mi.c_prime},
                {"m", mi.m},
                {"induced_witness", to_json(h, mi.induced_witness)},
                {"semi_induced_witness", to_json(h, mi.semi_induced_witness)},
                {"matching_witness", to_json(h, mi.matching_witness)}};
  });
  section("bouquets", [&] {
    const BouquetInvariants& bi = ctx.bouquets();
    return Json{{"d", bi.d},
                {"d_prime", bi.d_prime},
                {"d_witness", to_json(h, bi.d_witness)},
                {"d_prime_witness", to_json(h, bi.d_prime_witness)}};
  });
  section("complex", [&] {
    const auto dim = ctx.dim();
    Json c = to_json(h, ctx.complex());
    c["dim"] = dim ? Json(*dim) : Json("undefined");
    c["vertex_decomposable"] = to_json(h, is_vertex_decomposable(ctx.complex(), ctx.memo()));
    return c;
  });
  section("covers", [&] {
    const CoverList covers = minimal_vertex_covers(h);
    Json list = Json::array();
    for (VertexSet c : covers.covers) list.push_back(labels_json(h, c));
    return Json{{"bigheight", covers.bigheight}, {"minimal_vertex_covers", list}};
  });
  if (options.skip_homology) {
    j["homology"] = {{"skipped", true}};
  } else {
    section("homology", [&] { return to_json(ctx.betti()); });
  }
  section("vertices", [&] {
    Json rows = Json::array();
    for (const VertexRecord& rec : theorem_main_report(h, options.limits).records) {
      rows.push_back({{"vertex", h.label(rec.vertex)},
                      {"shedding", rec.shedding},
                      {"codominated", rec.codominated},
                      {"codominated_witness",
                       rec.codominated_witness ? labels_json(h, *rec.codominated_witness) : Json(nullptr)}});
    }
    return rows;
  });
  section("codismantlable", [&] {
    const auto order = is_codismantlable(h);
    if (!order) return Json{{"codismantlable", false}};
    Json seq = Json::array();
    for (VertexId v : order->order) seq.push_back(h.label(v));
    return Json{{"codismantlable", true}, {"order", seq}, {"replay_valid", order->valid}};
  });
  Json theorems = Json::object();
  for (const std::string& name : theorem_names()) {
    try {
      const TheoremCheck t = check_theorem(ctx, name);
      theorems[name] = {{"hypotheses_hold", t.hypotheses_hold},
                        {"conclusion_holds", t.hypotheses_hold ? Json(t.conclusion_holds) : Json(nullptr)}};
      if (t.hypotheses_hold && !t.conclusion_holds) out.violation = true;
    } catch (const Error& e) {
      if (!is_limit_error(e.code())) throw;
      out.cap_exceeded = true;
      theorems[name] = {{"omitted", e.what()}};
    }
  }
  j["theorems"] = theorems;
  return out;
}

}  // namespace hyperreg
