#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relcalc/fixtures.hpp"
#include "relcalc/generator.hpp"
#include "relcalc/perturb.hpp"
#include "relcalc/rng.hpp"

using namespace relcalc;

namespace {

const FieldTag kQ = FieldTag::rationals();
const FieldTag kF2 = FieldTag::prime_field(2);
const FieldTag kF3 = FieldTag::prime_field(3);

Vec vec(const FieldTag& tag, std::initializer_list<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(Scalar::from_int(tag, e));
  return v;
}

LinearRelation over_gf2(const LinearRelation& r) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Vec src = r.space().basis_row(i), dst;
    for (const auto& s : src)
      dst.push_back(Scalar::from_int(kF2, s.q_re().get_num().get_si()));
    rows.push_back(dst);
  }
  return LinearRelation::from_pairs(kF2, r.d(), rows);
}

}  // namespace

TEST_CASE("perturbation_order") {
  LinearRelation a = fixtures::ex31();
  CHECK(perturbation_order(a, a) == 0);
  CHECK(perturbation_order(a, fixtures::n2_relation()) == 1);
  auto [sa, sb] = fixtures::sharp(2);
  CHECK(perturbation_order(sa, sb) == 1);
  CHECK_THROWS_AS(perturbation_order(a, LinearRelation::identity(kQ, 3)), DimensionError);
}

TEST_CASE("s_n closed form on pinned instances") {
  LinearRelation a = fixtures::ex31();
  LinearRelation b = fixtures::n2_relation();
  CHECK(s_n(a, b, 0) == 0);
  CHECK(s_n(b, a, 0) == 0);
  CHECK(s_n(a, b, 1) == 1);  // K = span{e1}, mul(A) = span{e1}, mul(C) = 0
  CHECK(s_n(b, a, 1) == 0);  // B subset of A
  CHECK(s_n(b, a, 2) == 0);
  CHECK(s_n(a, a, 3) == 0);
}

TEST_CASE("s_n oracle agrees on the GF(2) translation of the example pair") {
  LinearRelation a = over_gf2(fixtures::ex31());
  LinearRelation b = over_gf2(fixtures::n2_relation());
  CHECK(s_n_oracle(a, b, 1) == 1);
  CHECK(s_n(a, b, 1) == 1);
  CHECK(s_n_oracle(b, a, 1) == 0);
  CHECK(s_n_oracle(a, a, 1) == 0);
  CHECK(s_n_oracle(a, b, 0) == 0);
  CHECK_THROWS_AS(s_n_oracle(fixtures::ex31(), fixtures::n2_relation(), 1),
                  FeasibilityError);
}

TEST_CASE("s_n equals the oracle on sampled GF(2)/GF(3) pairs") {
  for (const FieldTag& tag : {kF2, kF3}) {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
      auto [a, b] = gen_pair(tag, 2, 1, 0x5EED5EEDull + tag.p, trial);
      for (std::size_t n = 0; n <= 3; ++n)
        CHECK(s_n(a, b, n) == s_n_oracle(a, b, n));
    }
  }
}

TEST_CASE("s_n vanishes for operator graphs") {
  SplitMix64 rng(8);
  for (int iter = 0; iter < 20; ++iter) {
    LinearRelation a = LinearRelation::from_graph(random_matrix(rng, kF3, 3, 3, true));
    LinearRelation b = LinearRelation::from_graph(random_matrix(rng, kF3, 3, 3, true));
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(s_n(a, b, n) == 0);
      CHECK(s_n(b, a, n) == 0);
    }
  }
}

TEST_CASE("decompose_path basics") {
  LinearRelation a = fixtures::ex31();
  CHECK(decompose_path(a, a).size() == 1);
  LinearRelation b = fixtures::n2_relation();
  auto path01 = decompose_path(a, b);
  REQUIRE(path01.size() == 2);
  CHECK(path01.front() == a);
  CHECK(path01.back() == b);
}

TEST_CASE("decompose_path on random p-dimensional pairs") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    auto [a, b] = gen_pair(kF3, 3, 2, 0xABCDEFull, trial);
    long p = perturbation_order(a, b);
    auto path = decompose_path(a, b);
    REQUIRE(static_cast<long>(path.size()) == p + 1);
    CHECK(path.front() == a);
    CHECK(path.back() == b);
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      CHECK(perturbation_order(path[k], path[k + 1]) <= 1);
  }
  // nested input gives a nested path
  SplitMix64 rng(505);
  for (int iter = 0; iter < 20; ++iter) {
    LinearRelation b(3, random_subspace(rng, kF3, 6, 4));
    if (b.dim() < 3) continue;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i + 2 < b.dim(); ++i) rows.push_back(b.space().basis_row(i));
    LinearRelation a = LinearRelation::from_pairs(kF3, 3, rows);
    auto path = decompose_path(a, b);
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      CHECK(path[k + 1].space().contains(path[k].space()));
  }
}

TEST_CASE("check_bounds: identical relations pass with zero differences") {
  PerturbReport rep = check_bounds(fixtures::ex31(), fixtures::ex31(), 4);
  CHECK(rep.order == 0);
  CHECK(rep.pass());
  for (std::size_t n = 0; n <= 4; ++n) CHECK(rep.d_a[n] == rep.d_b[n]);
}

TEST_CASE("check_bounds: nested example pins the lower bound") {
  LinearRelation small = fixtures::n2_relation();
  LinearRelation big = fixtures::ex31();
  PerturbReport rep = check_bounds(small, big, 3);
  CHECK(rep.order == 1);
  CHECK(rep.nested);
  CHECK(rep.pass());
  // D_1(big) - D_1(small) = 0 - 1 = -1 >= -s_1(big, small) = -1
  CHECK(rep.d_b[1] - rep.d_a[1] == -1);
  CHECK(rep.s_ba[1] == 1);
}

TEST_CASE("check_bounds: sharpness pair achieves n + 1 and still passes") {
  auto [a, b] = fixtures::sharp(2);
  PerturbReport rep = check_bounds(a, b, 3);
  CHECK(rep.order == 1);
  CHECK(rep.pass());
  CHECK(rep.d_a[2] - rep.d_b[2] == 3);  // the worst case n + 1 at n = 2
  CHECK(rep.s_bracket[2] == 2);         // 1 + s_2[A,B] = 3 exactly
}

TEST_CASE("check_bounds campaigns stay violation-free") {
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    auto [a, b] = gen_pair(kF3, 3, 1, 0x1234ull, trial);
    PerturbReport rep = check_bounds(a, b, 6);
    for (const auto* v : rep.violations())
      FAIL("violated ", v->rule, " at n=", v->n, " value=", v->value);
  }
  for (std::uint64_t trial = 0; trial < 25; ++trial) {
    auto [a, b] = gen_pair(kQ, 3, 2, 0x4321ull, trial);
    PerturbReport rep = check_bounds(a, b, 6);
    CHECK(rep.pass());
  }
}

TEST_CASE("enumerate_subspaces counts match Gaussian binomials") {
  CHECK(enumerate_subspaces(Subspace::full(kF2, 3)).size() == 16);   // 1+7+7+1
  CHECK(enumerate_subspaces(Subspace::full(kF3, 2)).size() == 6);    // 1+4+1
  CHECK(enumerate_subspaces(Subspace::full(kF2, 4)).size() == 67);
  CHECK_THROWS_AS(enumerate_subspaces(Subspace::full(kQ, 2)), FeasibilityError);
}
