#include "relcalc/campaign.hpp"

#include <chrono>

#include "relcalc/chains.hpp"
#include "relcalc/fixtures.hpp"
#include "relcalc/generator.hpp"
#include "relcalc/rng.hpp"

namespace relcalc {

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Relation1Dim: return "relation-1dim";
    case Scenario::RelationPDim: return "relation-pdim";
    case Scenario::PencilRankOne: return "pencil-rankone";
    case Scenario::SnOracle: return "s_n-oracle";
    case Scenario::Fixtures: return "fixtures";
  }
  return "?";
}

Scenario scenario_parse(const std::string& name) {
  if (name == "relation-1dim") return Scenario::Relation1Dim;
  if (name == "relation-pdim") return Scenario::RelationPDim;
  if (name == "pencil-rankone") return Scenario::PencilRankOne;
  if (name == "s_n-oracle") return Scenario::SnOracle;
  if (name == "fixtures") return Scenario::Fixtures;
  throw ParseError("unknown scenario '" + name + "'");
}

namespace {

struct Collector {
  Report& rep;
  std::uint64_t trial = 0;
  long trial_checks = 0;
  long trial_violations = 0;

  void take(const std::string& rule, long n, long lo, long hi, long value,
            const std::string& lambda = "") {
    ++trial_checks;
    rep.histograms[rule][value] += 1;
    if (value < lo || value > hi) {
      ++trial_violations;
      rep.violations.push_back({trial, rule, n, lambda, lo, hi, value});
    }
  }

  void take(const BoundCheck& c, const std::string& lambda = "") {
    take(c.rule, c.n, c.lo, c.hi, c.value, lambda);
  }

  void close_trial(const std::string& kind) {
    rep.trials.push_back({trial, kind, trial_checks, trial_violations});
    trial_checks = trial_violations = 0;
  }
};

std::size_t pick_dim(const CampaignConfig& cfg, std::uint64_t trial) {
  if (cfg.dmax <= cfg.dmin) return cfg.dmin;
  SplitMix64 rng(cfg.seed ^ (0x9E3779B9ull * (trial + 1)));
  return cfg.dmin + rng.below(cfg.dmax - cfg.dmin + 1);
}

void relation_trial(const CampaignConfig& cfg, std::uint64_t trial, std::size_t order,
                    Collector& col) {
  const std::size_t d = pick_dim(cfg, trial);
  const std::size_t nmax = cfg.nmax ? cfg.nmax : 2 * d;
  auto [a, b] = gen_pair(cfg.field, d, order, cfg.seed, trial);
  PerturbReport rep = check_bounds(a, b, nmax);
  for (const auto& c : rep.checks) col.take(c);

  if (order <= 1) {
    LinearRelation c(a.d(), intersect(a.space(), b.space()));
    for (const LinearRelation* top : {&a, &b}) {
      if (top->dim() != c.dim() + 1) continue;
      for (std::size_t m = 1; m <= cfg.chainspace_mmax; ++m)
        col.take("chainspace.le.m", static_cast<long>(m), 0, static_cast<long>(m),
                 chainspace_quotient_dim(*top, c, m));
    }
  } else {
    // every step of the one-dimensional path obeys the one-dim theorems
    std::vector<LinearRelation> path = decompose_path(a, b);
    col.take("path.length", 0, 1, rep.order + 1, static_cast<long>(path.size()));
    col.take("path.endpoints", 0, 1, 1,
             (path.front() == a && path.back() == b) ? 1 : 0);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      col.take("path.step_order", static_cast<long>(k), 0, 1,
               perturbation_order(path[k], path[k + 1]));
      PerturbReport step = check_bounds(path[k], path[k + 1], nmax);
      for (const auto& c : step.checks) col.take(c);
    }
  }
  col.close_trial("order<=" + std::to_string(order));
}

void pencil_trial(const CampaignConfig& cfg, std::uint64_t trial, Collector& col) {
  const std::size_t d = pick_dim(cfg, trial);
  const std::size_t nmax = cfg.nmax ? cfg.nmax : 2 * d;
  auto [p, q] = gen_pencil(cfg.field, d, cfg.seed, trial);
  Pencil pert = apply_perturbation(p, q);
  BoundReport rep = pencil_bound_report(p, q, auto_lambdas(p, pert), nmax);
  col.take("pencil.relation_order", 0, 0, 1, rep.relation_order);
  col.take("pencil.relation_order.dual", 0, 0, 1, rep.dual_relation_order);
  if (rep.inclusion)
    col.take("pencil.incl.relation_subset", 0, 1, 1,
             rep.inclusion_relation_verified ? 1 : 0);
  for (const auto& lc : rep.lambdas)
    for (const auto& c : lc.checks) col.take(c, lc.lambda.str());
  for (const auto& c : rep.wong_checks) col.take(c);
  col.close_trial(rep.case_name + (rep.inclusion ? "+incl" : ""));
}

LinearRelation random_relation(SplitMix64& rng, const FieldTag& tag, std::size_t d) {
  return LinearRelation(d, random_subspace(rng, tag, 2 * d, rng.below(2 * d + 1)));
}

void sn_oracle_campaign(const CampaignConfig& cfg, Collector& col) {
  const std::size_t ncap = std::min<std::size_t>(cfg.nmax ? cfg.nmax : 3, 3);
  auto compare = [&](const LinearRelation& a, const LinearRelation& b) {
    for (std::size_t n = 0; n <= ncap; ++n) {
      long closed = s_n(a, b, n);
      long oracle = s_n_oracle(a, b, n);
      col.take("s_n.oracle.match", static_cast<long>(n), oracle, oracle, closed);
    }
  };
  // exhaustive over all relation pairs when the subspace lattice is small
  bool exhaustive = false;
  if (cfg.dmin == cfg.dmax && 2 * cfg.dmin <= 4) {
    std::vector<Subspace> all =
        enumerate_subspaces(Subspace::full(cfg.field, 2 * cfg.dmin));
    exhaustive = true;
    for (const Subspace& sa : all)
      for (const Subspace& sb : all) {
        compare(LinearRelation(cfg.dmin, sa), LinearRelation(cfg.dmin, sb));
        ++col.trial;
      }
    col.trial = 0;
    col.close_trial("exhaustive d=" + std::to_string(cfg.dmin) + " pairs=" +
                    std::to_string(all.size() * all.size()));
  }
  if (!exhaustive) {
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      col.trial = trial;
      const std::size_t d = pick_dim(cfg, trial);
      SplitMix64 rng(cfg.seed ^ trial);
      compare(random_relation(rng, cfg.field, d), random_relation(rng, cfg.field, d));
    }
    col.trial = 0;
    col.close_trial("sampled pairs=" + std::to_string(cfg.trials));
  }
}

void expect(Collector& col, const std::string& rule, long expected, long actual) {
  col.take(rule, 0, expected, expected, actual);
}

void fixtures_campaign(Collector& col) {
  const FieldTag q = FieldTag::rationals();
  const Eigenvalue zero = Eigenvalue::of(Scalar::zero(q));
  Vec e1 = unit_vec(q, 2, 0), e2 = unit_vec(q, 2, 1), z2 = zero_vec(q, 2);

  {  // EX31
    LinearRelation a = fixtures::ex31();
    const RelationParts& pa = parts(a);
    expect(col, "ex31.dim", 3, static_cast<long>(a.dim()));
    expect(col, "ex31.ker_dim", 2, static_cast<long>(pa.ker.dim()));
    expect(col, "ex31.mul_dim", 1, static_cast<long>(pa.mul.dim()));
    expect(col, "ex31.mul_is_e1", 1, pa.mul.contains(e1) ? 1 : 0);
    expect(col, "ex31.dom_dim", 2, static_cast<long>(pa.dom.dim()));
    expect(col, "ex31.ran_dim", 1, static_cast<long>(pa.ran.dim()));
    std::vector<long> deg = jordan_degrees(a, 4);
    expect(col, "ex31.D0", 2, deg[0]);
    for (std::size_t n = 1; n <= 4; ++n) expect(col, "ex31.Dn", 0, deg[n]);
    expect(col, "ex31.singular_chain", 1, has_singular_chain(a) ? 1 : 0);
    ChainClass c1 = classify_chain(a, ChainTuple({z2, e1}), zero);
    expect(col, "ex31.classify.(0,e1).singular", 1, c1.is_singular ? 1 : 0);
    expect(col, "ex31.classify.(0,e1).jordan", 0, c1.is_jordan ? 1 : 0);
    ChainClass c2 = classify_chain(a, ChainTuple({e2, e1}), zero);
    expect(col, "ex31.classify.(e2,e1).quasi", 1, c2.is_quasi_jordan ? 1 : 0);
    expect(col, "ex31.classify.(e2,e1).singular", 0, c2.is_singular ? 1 : 0);
    expect(col, "ex31.classify.(e2,e1).jordan", 0, c2.is_jordan ? 1 : 0);
    expect(col, "ex31.power2.dim", 3, static_cast<long>(power(a, 2).dim()));
    LinearRelation n2 = fixtures::n2_relation();
    expect(col, "ex31.order_vs_n2", 1, perturbation_order(a, n2));
    expect(col, "ex31.s1_vs_n2", 1, s_n(a, n2, 1));
    expect(col, "ex31.s1_n2_side", 0, s_n(n2, a, 1));
    PerturbReport pr = check_bounds(n2, a, 4);
    expect(col, "ex31.n2.bounds_pass", 1, pr.pass() ? 1 : 0);
    expect(col, "ex31.n2.D1_diff", -1, pr.d_b[1] - pr.d_a[1]);
    expect(col, "ex31.n2.chainspace.m1", 1, chainspace_quotient_dim(a, n2, 1));
    expect(col, "ex31.n2.chainspace.m2", 2, chainspace_quotient_dim(a, n2, 2));
    col.close_trial("fixture EX31");
    ++col.trial;
  }

  for (std::size_t n = 2; n <= 5; ++n) {  // SHARP(2..5)
    auto [a, b] = fixtures::sharp(n);
    expect(col, "sharp.order", 1, perturbation_order(a, b));
    std::vector<long> da = jordan_degrees(a, n + 1);
    std::vector<long> db = jordan_degrees(b, n + 1);
    // exact tables: D_k(A) = n+1 for k <= n, D_k(B) = n+2 for k < n, then 0
    for (std::size_t k = 0; k <= n; ++k)
      expect(col, "sharp.DA.k" + std::to_string(k), static_cast<long>(n + 1), da[k]);
    expect(col, "sharp.DA.top", 0, da[n + 1]);
    for (std::size_t k = 0; k < n; ++k)
      expect(col, "sharp.DB.k" + std::to_string(k), static_cast<long>(n + 2), db[k]);
    expect(col, "sharp.DB.level_n", 0, db[n]);
    expect(col, "sharp.difference", static_cast<long>(n + 1), da[n] - db[n]);
    expect(col, "sharp.s_bracket_at_n", static_cast<long>(n),
           std::max(s_n(a, b, n), s_n(b, a, n)));
    expect(col, "sharp.bounds_pass", 1, check_bounds(a, b, n + 1).pass() ? 1 : 0);
    col.close_trial("fixture SHARP(" + std::to_string(n) + ")");
    ++col.trial;
  }

  {  // WONG
    Pencil p = fixtures::wong_pencil();
    std::vector<Subspace> w = wong(p, 4);
    expect(col, "wong.W1_dim", 1, static_cast<long>(w[1].dim()));
    expect(col, "wong.W2_dim", 2, static_cast<long>(w[2].dim()));
    expect(col, "wong.W3_dim", 2, static_cast<long>(w[3].dim()));
    LinearRelation fe = to_relation(dual(p));
    bool identity_holds = true;
    for (std::size_t n = 0; n <= 4; ++n)
      identity_holds = identity_holds && w[n] == parts(power(fe, n)).ker;
    expect(col, "wong.identity", 1, identity_holds ? 1 : 0);
    std::vector<long> at_inf = jordan_dims_at(p, Eigenvalue::infinity(), 3);
    expect(col, "wong.inf.D0", 1, at_inf[0]);
    expect(col, "wong.inf.D1", 1, at_inf[1]);
    expect(col, "wong.inf.D2", 0, at_inf[2]);
    col.close_trial("fixture WONG");
    ++col.trial;
  }

  {  // SING
    Pencil p = fixtures::sing_pencil();
    PencilProfile prof = profile(p);
    expect(col, "sing.regular", 0, prof.regular ? 1 : 0);
    expect(col, "sing.rank", 1, static_cast<long>(prof.pencil_rank));
    expect(col, "sing.det_zero", 1, prof.det_poly.is_zero() ? 1 : 0);
    expect(col, "sing.relation_dim", 3, static_cast<long>(to_relation(p).dim()));
    expect(col, "sing.D0_at_1", 2,
           jordan_dims_at(p, Eigenvalue::of(Scalar::one(q)), 1)[0]);
    std::vector<Subspace> w = wong(p, 2);
    expect(col, "sing.W1_dim", 1, static_cast<long>(w[1].dim()));
    expect(col, "sing.W2_dim", 1, static_cast<long>(w[2].dim()));
    expect(col, "sing.singular_chain", 1,
           has_singular_chain(to_relation(p)) ? 1 : 0);
    col.close_trial("fixture SING");
    ++col.trial;
  }

  {  // N2 pencil and its pinned rank-one perturbation
    Pencil p = fixtures::n2_pencil();
    PencilProfile prof = profile(p);
    expect(col, "n2.regular", 1, prof.regular ? 1 : 0);
    expect(col, "n2.rank", 2, static_cast<long>(prof.pencil_rank));
    expect(col, "n2.det_deg", 2, prof.det_poly.degree());
    std::vector<long> at0 = jordan_dims_at(p, zero, 2);
    expect(col, "n2.D0_at_0", 1, at0[0]);
    expect(col, "n2.D1_at_0", 1, at0[1]);
    expect(col, "n2.D0_at_inf", 0, jordan_dims_at(p, Eigenvalue::infinity(), 1)[0]);
    expect(col, "n2.no_singular_chain", 0,
           has_singular_chain(to_relation(p)) ? 1 : 0);
    RankOnePencil q1(e1, z2, e2);
    Pencil pert = apply_perturbation(p, q1);
    expect(col, "n2.pert.regular", 1, profile(pert).regular ? 1 : 0);
    BoundReport rep = pencil_bound_report(p, q1, auto_lambdas(p, pert), 4);
    expect(col, "n2.pert.case_reg_reg", 1, rep.case_name == "regular/regular" ? 1 : 0);
    expect(col, "n2.pert.pass", 1, rep.pass() ? 1 : 0);
    expect(col, "n2.pert.relation_order", 1, rep.relation_order);
    col.close_trial("fixture N2-pencil");
  }
}

}  // namespace

Report run_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw PreconditionError("campaign needs trials >= 1");
  if (cfg.dmin < 1 || cfg.dmin > cfg.dmax)
    throw PreconditionError("campaign d range invalid");
  if (cfg.field.kind != FieldKind::GFp && cfg.dmax > 8)
    throw PreconditionError("campaign d <= 8 over Q/Qi");
  if (cfg.scenario == Scenario::SnOracle) {
    if (cfg.field.kind != FieldKind::GFp || cfg.field.p > 3)
      throw FeasibilityError("s_n-oracle scenario needs GF(2) or GF(3)");
    if (cfg.dmax > 6) throw FeasibilityError("s_n-oracle scenario needs d <= 6");
  }

  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.config = cfg;
  Collector col{rep};
  switch (cfg.scenario) {
    case Scenario::Relation1Dim:
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        col.trial = t;
        relation_trial(cfg, t, 1, col);
      }
      break;
    case Scenario::RelationPDim:
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        col.trial = t;
        relation_trial(cfg, t, cfg.p, col);
      }
      break;
    case Scenario::PencilRankOne:
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        col.trial = t;
        pencil_trial(cfg, t, col);
      }
      break;
    case Scenario::SnOracle:
      sn_oracle_campaign(cfg, col);
      break;
    case Scenario::Fixtures:
      fixtures_campaign(col);
      break;
  }
  rep.wall_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count());
  return rep;
}

Json campaign_config_to_json(const CampaignConfig& cfg) {
  return Json{{"field", field_to_json(cfg.field)},
              {"dmin", cfg.dmin},
              {"dmax", cfg.dmax},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"scenario", scenario_name(cfg.scenario)},
              {"nmax", cfg.nmax},
              {"p", cfg.p}};
}

Json report_to_json(const Report& rep) {
  Json trials = Json::array();
  for (const auto& t : rep.trials)
    trials.push_back(Json{{"trial", t.trial},
                          {"kind", t.kind},
                          {"checks", t.checks},
                          {"violations", t.violations}});
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    Json jv{{"trial", v.trial}, {"rule", v.rule}, {"n", v.n},
            {"lo", v.lo},       {"hi", v.hi},     {"value", v.value}};
    if (!v.lambda.empty()) jv["lambda"] = v.lambda;
    violations.push_back(std::move(jv));
  }
  Json hist = Json::object();
  for (const auto& [rule, values] : rep.histograms) {
    Json h = Json::object();
    for (const auto& [value, count] : values) h[std::to_string(value)] = count;
    hist[rule] = std::move(h);
  }
  return Json{{"config", campaign_config_to_json(rep.config)},
              {"trials", std::move(trials)},
              {"violations", std::move(violations)},
              {"histograms", std::move(hist)},
              {"pass", rep.pass()},
              {"wall_ms", rep.wall_ms}};
}

}  // namespace relcalc
