#include "relcalc/subspace.hpp"

namespace relcalc {

Subspace Subspace::zero(const FieldTag& tag, std::size_t ambient) {
  return Subspace(ambient, Matrix(tag, 0, ambient));
}

Subspace Subspace::full(const FieldTag& tag, std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(tag, ambient));
}

Subspace Subspace::span(const FieldTag& tag, std::size_t ambient,
                        const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionError("span: vector length != ambient");
  return row_space(Matrix::from_rows(tag, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix basis(m.tag(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) basis.at(i, c) = r.canonical.at(i, c);
  return Subspace(m.cols(), std::move(basis));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("reduce: length != ambient");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // canonical basis rows have a leading 1 at their pivot column
    std::size_t piv = 0;
    while (piv < ambient_ && basis_.at(i, piv).is_zero()) ++piv;
    if (piv == ambient_) continue;
    if (r[piv].is_zero()) continue;
    Scalar f = r[piv];
    for (std::size_t c = piv; c < ambient_; ++c)
      r[c] = r[c] - f * basis_.at(i, c);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("containment: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || !(u.tag() == v.tag()))
    throw DimensionError("sum: ambient/field mismatch");
  std::vector<Vec> rows;
  rows.reserve(u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(u.basis_row(i));
  for (std::size_t i = 0; i < v.dim(); ++i) rows.push_back(v.basis_row(i));
  return Subspace::span(u.tag(), u.ambient(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || !(u.tag() == v.tag()))
    throw DimensionError("intersect: ambient/field mismatch");
  const std::size_t k = u.dim(), l = v.dim(), n = u.ambient();
  if (k == 0 || l == 0) return Subspace::zero(u.tag(), n);
  // columns = u basis vectors, then negated v basis vectors; a kernel
  // element (a, b) witnesses sum_i a_i u_i = sum_j b_j v_j.
  Matrix m(u.tag(), n, k + l);
  for (std::size_t j = 0; j < k; ++j) {
    Vec col = u.basis_row(j);
    for (std::size_t r = 0; r < n; ++r) m.at(r, j) = col[r];
  }
  for (std::size_t j = 0; j < l; ++j) {
    Vec col = v.basis_row(j);
    for (std::size_t r = 0; r < n; ++r) m.at(r, k + j) = -col[r];
  }
  Subspace coeff = kernel(m);
  std::vector<Vec> gens;
  gens.reserve(coeff.dim());
  for (std::size_t i = 0; i < coeff.dim(); ++i) {
    Vec ab = coeff.basis_row(i);
    Vec w = zero_vec(u.tag(), n);
    for (std::size_t j = 0; j < k; ++j)
      if (!ab[j].is_zero()) w = add(w, scale(ab[j], u.basis_row(j)));
    gens.push_back(std::move(w));
  }
  return Subspace::span(u.tag(), n, gens);
}

std::size_t quotient_dim(const Subspace& v, const Subspace& u) {
  if (!v.contains(u))
    throw PreconditionError("quotient_dim: second argument is not a subspace of the first");
  return v.dim() - u.dim();
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(m.tag(), n);
    x[f] = Scalar::one(m.tag());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      x[r.pivots[i]] = -r.canonical.at(i, f);
    gens.push_back(std::move(x));
  }
  return Subspace::span(m.tag(), n, gens);
}

Matrix constraints(const Subspace& s) {
  return kernel(s.basis()).basis();
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw DimensionError("image: shape mismatch");
  std::vector<Vec> gens;
  gens.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(m.apply(s.basis_row(i)));
  return Subspace::span(m.tag(), m.rows(), gens);
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw DimensionError("preimage: shape mismatch");
  return kernel(constraints(s) * m);
}

Subspace project(const Subspace& s, std::size_t from, std::size_t len) {
  if (from + len > s.ambient()) throw DimensionError("project: window out of range");
  std::vector<Vec> gens;
  gens.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec row = s.basis_row(i);
    gens.emplace_back(row.begin() + from, row.begin() + from + len);
  }
  return Subspace::span(s.tag(), len, gens);
}

}  // namespace relcalc
