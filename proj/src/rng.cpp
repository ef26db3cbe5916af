#include "relcalc/rng.hpp"

namespace relcalc {

Scalar random_scalar(SplitMix64& rng, const FieldTag& tag) {
  switch (tag.kind) {
    case FieldKind::Q: {
      long num = static_cast<long>(rng.below(19)) - 9;
      long den = static_cast<long>(rng.below(9)) + 1;
      return Scalar::fraction(tag, num, den);
    }
    case FieldKind::Qi: {
      long re_num = static_cast<long>(rng.below(19)) - 9;
      long re_den = static_cast<long>(rng.below(9)) + 1;
      long im_num = static_cast<long>(rng.below(19)) - 9;
      long im_den = static_cast<long>(rng.below(9)) + 1;
      mpq_class re(re_num, re_den), im(im_num, im_den);
      re.canonicalize();
      im.canonicalize();
      return Scalar::gaussian(re, im);
    }
    case FieldKind::GFp:
      return Scalar::from_int(tag, static_cast<long>(rng.below(tag.p)));
  }
  throw PreconditionError("bad field tag");
}

Scalar random_sparse_scalar(SplitMix64& rng, const FieldTag& tag) {
  if (rng.chance(1, 2)) return Scalar::zero(tag);
  if (tag.kind == FieldKind::GFp)
    return Scalar::from_int(tag, 1 + static_cast<long>(rng.below(tag.p - 1)));
  long num = static_cast<long>(rng.below(5)) - 2;
  if (num == 0) num = 1;
  if (tag.kind == FieldKind::Qi && rng.chance(1, 3)) {
    mpq_class im(num);
    return Scalar::gaussian(mpq_class(0), im);
  }
  return Scalar::from_int(tag, num);
}

Vec random_vector(SplitMix64& rng, const FieldTag& tag, std::size_t n, bool sparse) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(sparse ? random_sparse_scalar(rng, tag) : random_scalar(rng, tag));
  return v;
}

Matrix random_matrix(SplitMix64& rng, const FieldTag& tag, std::size_t rows,
                     std::size_t cols, bool sparse) {
  Matrix m(tag, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = sparse ? random_sparse_scalar(rng, tag) : random_scalar(rng, tag);
  return m;
}

Subspace random_subspace(SplitMix64& rng, const FieldTag& tag, std::size_t ambient,
                         std::size_t target_dim) {
  std::vector<Vec> gens;
  Subspace s = Subspace::zero(tag, ambient);
  // sparse draws may be dependent; retry a few times, then accept less
  for (int attempts = 0; s.dim() < target_dim && attempts < 64; ++attempts) {
    gens.push_back(random_vector(rng, tag, ambient));
    s = Subspace::span(tag, ambient, gens);
  }
  return s;
}

Matrix random_invertible(SplitMix64& rng, const FieldTag& tag, std::size_t n) {
  Matrix lower = Matrix::identity(tag, n);
  Matrix upper = Matrix::identity(tag, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) lower.at(r, c) = random_sparse_scalar(rng, tag);
      if (r < c) upper.at(r, c) = random_sparse_scalar(rng, tag);
    }
  return lower * upper;
}

}  // namespace relcalc
