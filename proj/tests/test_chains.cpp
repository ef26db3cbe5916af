#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relcalc/chains.hpp"
#include "relcalc/fixtures.hpp"
#include "relcalc/rng.hpp"

using namespace relcalc;

namespace {

const FieldTag kQ = FieldTag::rationals();
const FieldTag kF3 = FieldTag::prime_field(3);

Vec vec(const FieldTag& tag, std::initializer_list<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(Scalar::from_int(tag, e));
  return v;
}

Eigenvalue zero_ev(const FieldTag& tag) { return Eigenvalue::of(Scalar::zero(tag)); }

LinearRelation random_relation(SplitMix64& rng, const FieldTag& tag, std::size_t d) {
  return LinearRelation(d, random_subspace(rng, tag, 2 * d, d - 1 + rng.below(3)));
}

// Mixed pool: plain random relations plus nilpotent graphs (optionally with
// one extra random pair), whose higher kernel quotients are actually rich.
LinearRelation structured_relation(SplitMix64& rng, const FieldTag& tag) {
  std::size_t pick = rng.below(3);
  if (pick == 0) return random_relation(rng, tag, 2 + rng.below(2));
  const std::size_t d = 4;
  Matrix m(tag, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r + 1; c < d; ++c) m.at(r, c) = random_sparse_scalar(rng, tag);
  LinearRelation g = LinearRelation::from_graph(m);
  if (pick == 1) return g;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < g.dim(); ++i) rows.push_back(g.space().basis_row(i));
  rows.push_back(random_vector(rng, tag, 2 * d));
  return LinearRelation::from_pairs(tag, d, rows);
}

// Random quasi-Jordan chain of a with length n+1, when N(A^{n+1}) != 0.
std::vector<ChainTuple> sample_chains(SplitMix64& rng, const LinearRelation& a,
                                      std::size_t n, std::size_t count) {
  std::vector<ChainTuple> out;
  Subspace kern = parts(power(a, n + 1)).ker;
  if (kern.dim() == 0) return out;
  for (std::size_t i = 0; i < count; ++i) {
    Vec head = zero_vec(a.tag(), a.d());
    for (std::size_t b = 0; b < kern.dim(); ++b)
      head = add(head, scale(random_sparse_scalar(rng, a.tag()), kern.basis_row(b)));
    out.push_back(extract_jordan_chain(a, head, n));
  }
  return out;
}

}  // namespace

TEST_CASE("classify_chain on the example relation") {
  LinearRelation a = fixtures::ex31();
  Vec e1 = vec(kQ, {1, 0}), e2 = vec(kQ, {0, 1}), z = vec(kQ, {0, 0});

  ChainClass sing = classify_chain(a, ChainTuple({z, e1}), zero_ev(kQ));
  CHECK(sing.is_chain);
  CHECK(sing.is_quasi_jordan);
  CHECK(sing.is_singular);
  CHECK_FALSE(sing.is_jordan);

  ChainClass quasi = classify_chain(a, ChainTuple({e2, e1}), zero_ev(kQ));
  CHECK(quasi.is_quasi_jordan);
  CHECK_FALSE(quasi.is_singular);
  CHECK_FALSE(quasi.is_jordan);  // [x_1] = 0 because N(A^2) = N(A) = Q^2
}

TEST_CASE("classify_chain finds Jordan chains of the nilpotent block") {
  LinearRelation n2 = fixtures::n2_relation();
  Vec e1 = vec(kQ, {1, 0}), e2 = vec(kQ, {0, 1});
  ChainClass cls = classify_chain(n2, ChainTuple({e2, e1}), zero_ev(kQ));
  CHECK(cls.is_quasi_jordan);
  CHECK(cls.is_jordan);
  CHECK(cls.jordan_level == 1);
  CHECK_FALSE(cls.is_singular);

  // at lambda = infinity the roles flip through the inverse relation
  ChainClass inf = classify_chain(n2, ChainTuple({e1, e2}), Eigenvalue::infinity());
  CHECK(inf.is_chain);  // (e1|e2) in N2^{-1}
  CHECK_FALSE(classify_chain(n2, ChainTuple({e2, e1}), Eigenvalue::infinity()).is_chain);

  // zero tuple: chain and quasi-Jordan, never singular
  ChainClass degenerate = classify_chain(n2, ChainTuple({vec(kQ, {0, 0})}), zero_ev(kQ));
  CHECK(degenerate.is_chain);
  CHECK(degenerate.is_quasi_jordan);
  CHECK_FALSE(degenerate.is_singular);
  CHECK_FALSE(degenerate.is_jordan);

  CHECK_THROWS_AS(classify_chain(n2, ChainTuple({vec(kQ, {1, 0, 0})}), zero_ev(kQ)),
                  DimensionError);
}

TEST_CASE("extract_jordan_chain witnesses") {
  LinearRelation n2 = fixtures::n2_relation();
  ChainTuple t = extract_jordan_chain(n2, vec(kQ, {0, 1}), 1);
  CHECK(t == ChainTuple({vec(kQ, {0, 1}), vec(kQ, {1, 0})}));  // unique witness

  LinearRelation id = fixtures::identity2();
  ChainTuple z = extract_jordan_chain(id, vec(kQ, {0, 0}), 0);
  CHECK(z == ChainTuple({vec(kQ, {0, 0})}));

  // canonical witness for the example relation: free variables pinned to zero
  LinearRelation a = fixtures::ex31();
  ChainTuple w = extract_jordan_chain(a, vec(kQ, {0, 1}), 1);
  CHECK(w == ChainTuple({vec(kQ, {0, 1}), vec(kQ, {0, 0})}));
  CHECK(classify_chain(a, w, zero_ev(kQ)).is_quasi_jordan);
  // deterministic: a second run returns the same tuple
  CHECK(extract_jordan_chain(a, vec(kQ, {0, 1}), 1) == w);

  CHECK_THROWS_AS(extract_jordan_chain(id, vec(kQ, {1, 0}), 0), PreconditionError);
}

TEST_CASE("class_span_dim equality on fixtures") {
  LinearRelation n2 = fixtures::n2_relation();
  ClassSpanDims one = class_span_dim(
      n2, {ChainTuple({vec(kQ, {0, 1}), vec(kQ, {1, 0})})}, 1);
  CHECK(one.head_class_dim == 1);
  CHECK(one.tail_quotient_dim == 1);

  LinearRelation a = fixtures::ex31();
  ClassSpanDims zero = class_span_dim(
      a, {ChainTuple({vec(kQ, {0, 1}), vec(kQ, {1, 0})})}, 1);
  CHECK(zero.head_class_dim == 0);
  CHECK(zero.tail_quotient_dim == 0);  // tail e1 lies in mul(A)

  ClassSpanDims empty = class_span_dim(a, {}, 1);
  CHECK(empty.head_class_dim == 0);
  CHECK(empty.tail_quotient_dim == 0);

  CHECK_THROWS_AS(class_span_dim(a, {ChainTuple({vec(kQ, {0, 1}), vec(kQ, {0, 1})})}, 1),
                  PreconditionError);
}

TEST_CASE("reduce_chains: chains already inside C pass through") {
  LinearRelation a = fixtures::ex31();
  LinearRelation c = fixtures::n2_relation();
  std::vector<ChainTuple> chains{
      ChainTuple({vec(kQ, {0, 1}), vec(kQ, {1, 0})}),
      ChainTuple({vec(kQ, {1, 1}), vec(kQ, {1, 0})}),
  };
  ReducedChains out = reduce_chains(a, c, chains);
  REQUIRE(out.chains.size() == 1);
  CHECK(out.chains[0] == chains[0]);  // J empty: first m-1 unchanged
  CHECK(classify_chain(c, out.chains[0], zero_ev(kQ)).is_quasi_jordan);

  CHECK(reduce_chains(a, c, {chains[0]}).chains.empty());
  CHECK_THROWS_AS(reduce_chains(a, fixtures::identity2(), chains), PreconditionError);
}

TEST_CASE("reduce_chains subtracts the pivot chain") {
  LinearRelation a = fixtures::ex31();
  LinearRelation c = fixtures::n2_relation();
  // both level-1 pairs lie outside C; pivot is the first chain
  ChainTuple t1({vec(kQ, {1, 0}), vec(kQ, {1, 0})});   // (e1, e1)
  ChainTuple t2({vec(kQ, {0, 1}), vec(kQ, {2, 0})});   // (e2, 2 e1)
  ReducedChains out = reduce_chains(a, c, {t1, t2});
  REQUIRE(out.chains.size() == 1);
  CHECK(out.order == std::vector<std::size_t>{1, 0});
  CHECK(out.chains[0] == ChainTuple({vec(kQ, {-1, 1}), vec(kQ, {1, 0})}));
  CHECK(classify_chain(c, out.chains[0], zero_ev(kQ)).is_quasi_jordan);
  // level property: y_j - x_j in span{pivot entries up to level j}
  CHECK(Subspace::span(kQ, 2, {t1.x(1), t1.x(0)})
            .contains(sub(out.chains[0].x(1), t2.x(1))));
  CHECK(Subspace::span(kQ, 2, {t1.x(0)}).contains(sub(out.chains[0].x(0), t2.x(0))));
}

TEST_CASE("chainspace quotient dimensions") {
  LinearRelation a = fixtures::ex31();
  LinearRelation c = fixtures::n2_relation();
  CHECK(chainspace_quotient_dim(a, c, 1) == 1);
  CHECK(chainspace_quotient_dim(a, c, 2) == 2);
  for (std::size_t m = 1; m <= 4; ++m) CHECK(chainspace_quotient_dim(a, a, m) == 0);
  CHECK_THROWS_AS(chainspace_quotient_dim(c, a, 1), PreconditionError);
}

TEST_CASE("has_singular_chain on fixtures") {
  CHECK(has_singular_chain(fixtures::ex31()));
  CHECK_FALSE(has_singular_chain(fixtures::identity2()));
  CHECK_FALSE(has_singular_chain(fixtures::n2_relation()));
}

TEST_CASE("three-way equivalence for sampled quasi-Jordan chains") {
  SplitMix64 rng(2024);
  int informative = 0;
  for (int iter = 0; iter < 60; ++iter) {
    LinearRelation a = random_relation(rng, kF3, 2 + rng.below(2));
    std::size_t n = 1 + rng.below(2);
    for (const ChainTuple& t : sample_chains(rng, a, n, 2)) {
      Subspace mul_n = parts(power(a, n)).mul;
      Subspace ker_n = parts(power(a, n)).ker;
      Subspace ker_n1 = parts(power(a, n + 1)).ker;
      bool tail_outside = !mul_n.contains(t.x(0));
      bool head_nonzero = !ker_n.contains(t.x(n));
      bool all_classes_nonzero = true;
      for (std::size_t j = 1; j <= n; ++j)
        if (parts(power(a, j)).ker.contains(t.x(j))) {
          all_classes_nonzero = false;
          break;
        }
      CHECK(tail_outside == head_nonzero);
      CHECK(head_nonzero == all_classes_nonzero);
      if (head_nonzero) {
        ++informative;
        std::vector<Vec> entries(t.entries().begin(), t.entries().end());
        CHECK(Subspace::span(kF3, a.d(), entries).dim() == n + 1);
      }
      CHECK(ker_n1.contains(t.x(n)));
    }
  }
  CHECK(informative > 0);
}

TEST_CASE("class span identity for random chain families") {
  SplitMix64 rng(77);
  for (int iter = 0; iter < 50; ++iter) {
    LinearRelation a = random_relation(rng, kF3, 2 + rng.below(3));  // d <= 4
    std::size_t n = 1 + rng.below(2);
    std::vector<ChainTuple> chains = sample_chains(rng, a, n, 1 + rng.below(3));
    if (chains.empty()) continue;
    ClassSpanDims dims = class_span_dim(a, chains, n);
    CHECK(dims.head_class_dim == dims.tail_quotient_dim);
  }
}

TEST_CASE("independence lemma implications") {
  SplitMix64 rng(4096);
  int premise_hits = 0;
  for (int iter = 0; iter < 80; ++iter) {
    LinearRelation a = structured_relation(rng, kF3);
    std::size_t n = 1;
    std::vector<ChainTuple> chains = sample_chains(rng, a, n, 2);
    if (chains.size() < 2) continue;
    const std::size_t m = chains.size(), d = a.d();

    Subspace ker_n = parts(power(a, n)).ker;
    std::vector<Vec> heads_mod;  // head classes: independence via span dim mod N(A^n)
    std::vector<Vec> all_entries;
    std::vector<Vec> all_pairs;
    std::vector<Vec> tails;
    for (const auto& t : chains) {
      heads_mod.push_back(t.x(n));
      tails.push_back(t.x(0));
      for (const auto& e : t.entries()) all_entries.push_back(e);
      for (std::size_t j = 1; j <= n; ++j) all_pairs.push_back(concat(t.x(j), t.x(j - 1)));
      all_pairs.push_back(concat(t.x(0), zero_vec(kF3, d)));
    }
    bool i_holds = sum(Subspace::span(kF3, d, heads_mod), ker_n).dim() ==
                   ker_n.dim() + m;
    bool ii_holds = Subspace::span(kF3, d, all_entries).dim() == m * (n + 1);
    bool iii_holds = Subspace::span(kF3, 2 * d, all_pairs).dim() == m * (n + 1);
    if (i_holds) CHECK(ii_holds);
    if (ii_holds) CHECK(iii_holds);
    bool side = intersect(Subspace::span(kF3, d, tails), parts(power(a, n)).mul).dim() == 0;
    if (side && iii_holds) CHECK(i_holds);
    if (i_holds) ++premise_hits;
  }
  CHECK(premise_hits > 0);
}

TEST_CASE("reduce_chains properties on random instances") {
  SplitMix64 rng(31337);
  int reduced = 0;
  for (int iter = 0; iter < 120; ++iter) {
    LinearRelation a = structured_relation(rng, kF3);
    if (a.dim() == 0) continue;
    // C = kernel of a random functional nonvanishing on A
    Vec psi;
    Subspace c_space = a.space();
    for (int tries = 0; tries < 20; ++tries) {
      psi = random_vector(rng, kF3, 2 * a.d(), false);
      Matrix row = Matrix::from_rows(kF3, 2 * a.d(), {psi});
      Subspace cut = intersect(a.space(), kernel(row));
      if (cut.dim() + 1 == a.dim()) {
        c_space = cut;
        break;
      }
    }
    if (c_space.dim() != a.dim() - 1) continue;
    LinearRelation c(a.d(), c_space);
    std::size_t n = 1 + rng.below(2);
    std::vector<ChainTuple> chains = sample_chains(rng, a, n, 2 + rng.below(2));
    if (chains.size() < 2) continue;
    ReducedChains out = reduce_chains(a, c, chains);
    REQUIRE(out.chains.size() == chains.size() - 1);
    const ChainTuple& pivot = chains[out.order.back()];
    for (std::size_t k = 0; k < out.chains.size(); ++k) {
      CHECK(classify_chain(c, out.chains[k], zero_ev(kF3)).is_quasi_jordan);
      const ChainTuple& in = chains[out.order[k]];
      for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Vec> window;
        for (std::size_t l = 0; l <= j; ++l) window.push_back(pivot.x(l));
        CHECK(Subspace::span(kF3, a.d(), window)
                  .contains(sub(out.chains[k].x(j), in.x(j))));
      }
    }
    // head-class independence transfers from A to C
    Subspace ker_a = parts(power(a, n)).ker;
    std::vector<Vec> in_heads;
    for (const auto& t : chains) in_heads.push_back(t.x(n));
    if (sum(Subspace::span(kF3, a.d(), in_heads), ker_a).dim() ==
        ker_a.dim() + chains.size()) {
      Subspace ker_c = parts(power(c, n)).ker;
      std::vector<Vec> out_heads;
      for (const auto& t : out.chains) out_heads.push_back(t.x(n));
      CHECK(sum(Subspace::span(kF3, a.d(), out_heads), ker_c).dim() ==
            ker_c.dim() + out.chains.size());
      ++reduced;
    }
  }
  CHECK(reduced > 0);
}

TEST_CASE("chainspace quotient bounded by m for one-dimensional extensions") {
  SplitMix64 rng(515151);
  for (int iter = 0; iter < 25; ++iter) {
    LinearRelation a = random_relation(rng, kF3, 2 + rng.below(2));
    if (a.dim() == 0) continue;
    Vec psi = random_vector(rng, kF3, 2 * a.d(), false);
    Subspace cut = intersect(a.space(), kernel(Matrix::from_rows(kF3, 2 * a.d(), {psi})));
    if (cut.dim() + 1 != a.dim()) continue;
    LinearRelation c(a.d(), cut);
    for (std::size_t m = 1; m <= 3; ++m) {
      long diff = chainspace_quotient_dim(a, c, m);
      CHECK(diff >= 0);
      CHECK(diff <= static_cast<long>(m));
    }
  }
}
