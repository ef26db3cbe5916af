#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relcalc/campaign.hpp"
#include "relcalc/fixtures.hpp"
#include "relcalc/generator.hpp"

using namespace relcalc;

namespace {
const FieldTag kQ = FieldTag::rationals();
const FieldTag kF3 = FieldTag::prime_field(3);
}

TEST_CASE("json round trips") {
  CHECK(field_from_json(field_to_json(kQ)) == kQ);
  CHECK(field_from_json(field_to_json(FieldTag::prime_field(7))) ==
        FieldTag::prime_field(7));
  CHECK_THROWS_AS(field_from_json(Json("R")), ParseError);

  LinearRelation a = fixtures::ex31();
  CHECK(relation_from_json(relation_to_json(a)) == a);

  Pencil p = fixtures::wong_pencil();
  Json pj = pencil_to_json(p);
  Pencil p2 = pencil_from_json(pj);
  CHECK(p2.E == p.E);
  CHECK(p2.F == p.F);

  RankOnePencil q({Scalar::fraction(kQ, 1, 2), Scalar::zero(kQ)},
                  {Scalar::zero(kQ), Scalar::from_int(kQ, -3)},
                  {Scalar::one(kQ), Scalar::one(kQ)});
  RankOnePencil q2 = rank_one_from_json(rank_one_to_json(kQ, q));
  CHECK(q2.u == q.u);
  CHECK(q2.v == q.v);
  CHECK(q2.w == q.w);

  Json bad = {{"field", "Q"}, {"d", 2}, {"pairs", {{"1", "0", "0"}}}};
  CHECK_THROWS_AS(relation_from_json(bad), ParseError);
}

TEST_CASE("eigenvalue parsing") {
  CHECK(eigenvalue_parse(kQ, "inf").is_infinity());
  CHECK(eigenvalue_parse(kQ, "-3/2").value() == Scalar::fraction(kQ, -3, 2));
  CHECK(eigenvalue_parse(FieldTag::gaussian_rationals(), "1+2i").value() ==
        Scalar::parse(FieldTag::gaussian_rationals(), "1+2i"));
}

TEST_CASE("generators are deterministic per (seed, trial)") {
  auto [a1, b1] = gen_pair(kF3, 4, 2, 42, 7);
  auto [a2, b2] = gen_pair(kF3, 4, 2, 42, 7);
  CHECK(a1 == a2);
  CHECK(b1 == b2);
  auto [a3, b3] = gen_pair(kF3, 4, 2, 42, 8);
  CHECK((a1 != a3 || b1 != b3));
  CHECK(perturbation_order(a1, b1) <= 2);

  auto [p1, q1] = gen_pencil(kQ, 3, 9, 4);
  auto [p2, q2] = gen_pencil(kQ, 3, 9, 4);
  CHECK(p1.E == p2.E);
  CHECK(p1.F == p2.F);
  CHECK(q1.u == q2.u);
  CHECK(q1.v == q2.v);
  CHECK(q1.w == q2.w);
}

TEST_CASE("gen_pair honors the requested order cap") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    auto [a, b] = gen_pair(kF3, 3, 0, 5, trial);
    CHECK(a == b);  // p = 0 collapses to A = B
    auto [c, d] = gen_pair(kF3, 4, 3, 5, trial);
    CHECK(perturbation_order(c, d) <= 3);
    CHECK(decompose_path(c, d).size() <= 4);
  }
}

TEST_CASE("fixtures scenario replays the regressions with zero violations") {
  CampaignConfig cfg;
  cfg.scenario = Scenario::Fixtures;
  Report rep = run_campaign(cfg);
  for (const auto& v : rep.violations)
    FAIL("fixture regression failed: ", v.rule, " expected [", v.lo, ",", v.hi,
         "] got ", v.value);
  CHECK(rep.pass());
  CHECK(rep.trials.size() == 8);  // EX31, SHARP(2..5), WONG, SING, N2
}

TEST_CASE("small campaigns run clean") {
  CampaignConfig cfg;
  cfg.field = kF3;
  cfg.dmin = cfg.dmax = 3;
  cfg.trials = 25;
  cfg.seed = 2026;

  cfg.scenario = Scenario::Relation1Dim;
  CHECK(run_campaign(cfg).pass());

  cfg.scenario = Scenario::RelationPDim;
  cfg.p = 2;
  CHECK(run_campaign(cfg).pass());

  cfg.scenario = Scenario::PencilRankOne;
  CHECK(run_campaign(cfg).pass());

  cfg.scenario = Scenario::SnOracle;
  cfg.dmin = cfg.dmax = 2;
  cfg.trials = 10;
  Report oracle = run_campaign(cfg);
  CHECK(oracle.pass());
  CHECK(oracle.histograms.at("s_n.oracle.match").size() >= 1);
}

TEST_CASE("campaign config validation") {
  CampaignConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_campaign(cfg), PreconditionError);
  cfg.trials = 1;
  cfg.dmin = cfg.dmax = 9;
  cfg.scenario = Scenario::Relation1Dim;
  CHECK_THROWS_AS(run_campaign(cfg), PreconditionError);
  cfg.dmin = cfg.dmax = 2;
  cfg.scenario = Scenario::SnOracle;
  cfg.field = kQ;
  CHECK_THROWS_AS(run_campaign(cfg), FeasibilityError);
}

TEST_CASE("reports are byte-identical modulo wall time") {
  CampaignConfig cfg;
  cfg.field = kF3;
  cfg.dmin = cfg.dmax = 3;
  cfg.trials = 10;
  cfg.seed = 77;
  cfg.scenario = Scenario::Relation1Dim;
  Json r1 = report_to_json(run_campaign(cfg));
  Json r2 = report_to_json(run_campaign(cfg));
  r1.erase("wall_ms");
  r2.erase("wall_ms");
  CHECK(r1.dump() == r2.dump());
}
