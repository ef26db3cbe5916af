#include "relcalc/generator.hpp"

#include "relcalc/rng.hpp"

namespace relcalc {

std::pair<LinearRelation, LinearRelation> gen_pair(const FieldTag& tag, std::size_t d,
                                                   std::size_t p, std::uint64_t seed,
                                                   std::uint64_t trial) {
  SplitMix64 rng(seed ^ trial);
  const std::size_t n = 2 * d;
  // core C around dimension d gives relations with interesting kernels
  std::size_t core_dim = d == 0 ? 0 : d - 1 + rng.below(3);
  if (core_dim > n) core_dim = n;
  Subspace core = random_subspace(rng, tag, n, core_dim);
  std::vector<Vec> a_rows, b_rows;
  for (std::size_t i = 0; i < core.dim(); ++i) {
    a_rows.push_back(core.basis_row(i));
    b_rows.push_back(core.basis_row(i));
  }
  for (std::size_t i = 0; i < p; ++i) {
    a_rows.push_back(random_vector(rng, tag, n));
    b_rows.push_back(random_vector(rng, tag, n));
  }
  return {LinearRelation::from_pairs(tag, d, a_rows),
          LinearRelation::from_pairs(tag, d, b_rows)};
}

namespace {

// det(sE - F) == 0 forced either by a zero row in both matrices or by a
// column pair proportional in both; a unimodular mix then hides the pattern.
std::pair<Matrix, Matrix> targeted_singular(SplitMix64& rng, const FieldTag& tag,
                                            std::size_t d) {
  Matrix e = random_matrix(rng, tag, d, d, true);
  Matrix f = random_matrix(rng, tag, d, d, true);
  if (d >= 2 && rng.chance(1, 2)) {
    std::size_t i = rng.below(d), j = rng.below(d);
    if (i == j) j = (j + 1) % d;
    Scalar alpha = random_scalar(rng, tag);
    for (std::size_t r = 0; r < d; ++r) {
      e.at(r, j) = alpha * e.at(r, i);
      f.at(r, j) = alpha * f.at(r, i);
    }
  } else {
    std::size_t r = rng.below(d);
    for (std::size_t c = 0; c < d; ++c) {
      e.at(r, c) = Scalar::zero(tag);
      f.at(r, c) = Scalar::zero(tag);
    }
  }
  Matrix left = random_invertible(rng, tag, d);
  Matrix right = random_invertible(rng, tag, d);
  return {left * e * right, left * f * right};
}

}  // namespace

std::pair<Pencil, RankOnePencil> gen_pencil(const FieldTag& tag, std::size_t d,
                                            std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 rng(seed ^ trial);
  bool want_singular = rng.chance(1, 2);
  Matrix e(tag, d, d), f(tag, d, d);
  if (want_singular) {
    auto ef = targeted_singular(rng, tag, d);
    e = ef.first;
    f = ef.second;
  } else {
    for (int tries = 0; tries < 32; ++tries) {
      e = random_matrix(rng, tag, d, d, true);
      f = random_matrix(rng, tag, d, d, true);
      if (profile(Pencil(e, f)).regular) break;
    }
  }
  Pencil pencil(e, f);

  Vec u, v, w;
  do { w = random_vector(rng, tag, d); } while (is_zero_vec(w));
  if (rng.chance(1, 4)) {
    // functional vanishing on N[F;-E]: v* = t*F, u* = t*E makes the
    // perturbed relation an extension of E^{-1}F
    for (int tries = 0; tries < 32; ++tries) {
      Vec t = random_vector(rng, tag, d);
      u = e.conj_transpose().apply(t);
      v = f.conj_transpose().apply(t);
      if (!is_zero_vec(u) || !is_zero_vec(v)) break;
    }
  }
  if (is_zero_vec(u) && is_zero_vec(v)) {
    u = Vec{};
    do {
      u = random_vector(rng, tag, d);
      v = random_vector(rng, tag, d);
    } while (is_zero_vec(u) && is_zero_vec(v));
  }
  return {pencil, RankOnePencil(u, v, w)};
}

}  // namespace relcalc
