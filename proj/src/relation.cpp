#include "relcalc/relation.hpp"

namespace relcalc {

struct LinearRelation::Cache {
  std::mutex mu;
  std::vector<LinearRelation> pows;  // pows[k] = A^{k+2}
  bool power_fixed = false;          // A^{k+1} == A^k observed at the tail
  std::optional<RelationParts> parts;
};

LinearRelation::LinearRelation(std::size_t d, Subspace space)
    : d_(d), space_(std::move(space)), cache_(std::make_shared<Cache>()) {
  if (space_.ambient() != 2 * d)
    throw DimensionError("relation space must live in F^{2d}");
}

LinearRelation LinearRelation::from_pairs(const FieldTag& tag, std::size_t d,
                                          const std::vector<Vec>& pairs) {
  return LinearRelation(d, Subspace::span(tag, 2 * d, pairs));
}

LinearRelation LinearRelation::from_graph(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("graph of a non-square matrix");
  const std::size_t d = m.rows();
  std::vector<Vec> rows;
  rows.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    rows.push_back(concat(unit_vec(m.tag(), d, i), m.col(i)));
  return from_pairs(m.tag(), d, rows);
}

LinearRelation LinearRelation::identity(const FieldTag& tag, std::size_t d) {
  std::vector<Vec> rows;
  rows.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    rows.push_back(concat(unit_vec(tag, d, i), unit_vec(tag, d, i)));
  return from_pairs(tag, d, rows);
}

bool LinearRelation::contains_pair(const Vec& x, const Vec& y) const {
  if (x.size() != d_ || y.size() != d_) throw DimensionError("pair length != d");
  return space_.contains(concat(x, y));
}

LinearRelation inverse(const LinearRelation& a) {
  const std::size_t d = a.d();
  std::vector<Vec> rows;
  rows.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec p = a.space().basis_row(i);
    Vec swapped(p.begin() + d, p.end());
    swapped.insert(swapped.end(), p.begin(), p.begin() + d);
    rows.push_back(std::move(swapped));
  }
  return LinearRelation::from_pairs(a.tag(), d, rows);
}

static void check_compatible(const LinearRelation& a, const LinearRelation& b) {
  if (a.d() != b.d()) throw DimensionError("relations with different ambient dimension");
  if (!(a.tag() == b.tag())) throw FieldMismatchError("relations over different fields");
}

LinearRelation compose(const LinearRelation& a, const LinearRelation& b) {
  check_compatible(a, b);
  const std::size_t d = a.d();
  const FieldTag tag = a.tag();
  // Coordinates (x, y, z) in F^{3d}; membership (x|y) in B and (y|z) in A
  // expressed through the annihilator rows of each relation, then the
  // witness block y is projected away.
  Matrix nb = constraints(b.space());
  Matrix na = constraints(a.space());
  Matrix m(tag, nb.rows() + na.rows(), 3 * d);
  for (std::size_t r = 0; r < nb.rows(); ++r)
    for (std::size_t c = 0; c < 2 * d; ++c) m.at(r, c) = nb.at(r, c);
  for (std::size_t r = 0; r < na.rows(); ++r)
    for (std::size_t c = 0; c < 2 * d; ++c) m.at(nb.rows() + r, d + c) = na.at(r, c);
  Subspace sol = kernel(m);
  std::vector<Vec> rows;
  rows.reserve(sol.dim());
  for (std::size_t i = 0; i < sol.dim(); ++i) {
    Vec t = sol.basis_row(i);
    Vec xz(t.begin(), t.begin() + d);
    xz.insert(xz.end(), t.begin() + 2 * d, t.end());
    rows.push_back(std::move(xz));
  }
  return LinearRelation::from_pairs(tag, d, rows);
}

LinearRelation power(const LinearRelation& a, std::size_t n) {
  if (n == 0) return LinearRelation::identity(a.tag(), a.d());
  if (n == 1) return a;
  LinearRelation::Cache& c = *a.cache_;
  std::lock_guard<std::mutex> lock(c.mu);
  while (c.pows.size() + 1 < n && !c.power_fixed) {
    const LinearRelation& last = c.pows.empty() ? a : c.pows.back();
    LinearRelation next = compose(a, last);
    if (next == last) {
      c.power_fixed = true;  // A^{k+1} = A^k propagates to all higher powers
      break;
    }
    c.pows.push_back(std::move(next));
  }
  if (c.pows.empty()) return a;  // A^2 == A
  return c.pows[std::min(n - 2, c.pows.size() - 1)];
}

const RelationParts& parts(const LinearRelation& a) {
  LinearRelation::Cache& c = *a.cache_;
  std::lock_guard<std::mutex> lock(c.mu);
  if (!c.parts) {
    const std::size_t d = a.d();
    Matrix n = constraints(a.space());
    Matrix nx(a.tag(), n.rows(), d), ny(a.tag(), n.rows(), d);
    for (std::size_t r = 0; r < n.rows(); ++r)
      for (std::size_t col = 0; col < d; ++col) {
        nx.at(r, col) = n.at(r, col);
        ny.at(r, col) = n.at(r, d + col);
      }
    c.parts = RelationParts{
        project(a.space(), 0, d),   // dom
        project(a.space(), d, d),   // ran
        kernel(nx),                 // ker: (x|0) in A
        kernel(ny),                 // mul: (0|y) in A
    };
  }
  return *c.parts;
}

LinearRelation op_sum(const LinearRelation& a, const LinearRelation& b) {
  check_compatible(a, b);
  const std::size_t d = a.d();
  const FieldTag tag = a.tag();
  // Coordinates (x, y, z): (x|y) in A, (x|z) in B; result pairs (x | y+z).
  Matrix na = constraints(a.space());
  Matrix nb = constraints(b.space());
  Matrix m(tag, na.rows() + nb.rows(), 3 * d);
  for (std::size_t r = 0; r < na.rows(); ++r)
    for (std::size_t c = 0; c < 2 * d; ++c) m.at(r, c) = na.at(r, c);
  for (std::size_t r = 0; r < nb.rows(); ++r) {
    for (std::size_t c = 0; c < d; ++c) m.at(na.rows() + r, c) = nb.at(r, c);
    for (std::size_t c = 0; c < d; ++c) m.at(na.rows() + r, 2 * d + c) = nb.at(r, d + c);
  }
  Subspace sol = kernel(m);
  std::vector<Vec> rows;
  rows.reserve(sol.dim());
  for (std::size_t i = 0; i < sol.dim(); ++i) {
    Vec t = sol.basis_row(i);
    Vec pair(t.begin(), t.begin() + d);
    for (std::size_t j = 0; j < d; ++j) pair.push_back(t[d + j] + t[2 * d + j]);
    rows.push_back(std::move(pair));
  }
  return LinearRelation::from_pairs(tag, d, rows);
}

LinearRelation scale_shift(const LinearRelation& a, const Scalar& lambda) {
  if (!(lambda.tag() == a.tag())) throw FieldMismatchError("shift scalar field mismatch");
  const std::size_t d = a.d();
  std::vector<Vec> rows;
  rows.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec p = a.space().basis_row(i);
    for (std::size_t j = 0; j < d; ++j) p[d + j] = p[d + j] - lambda * p[j];
    rows.push_back(std::move(p));
  }
  return LinearRelation::from_pairs(a.tag(), d, rows);
}

LinearRelation relation_at(const LinearRelation& a, const Eigenvalue& lambda) {
  return lambda.is_infinity() ? inverse(a) : scale_shift(a, lambda.value());
}

std::vector<long> kernel_dims(const LinearRelation& a, std::size_t nmax) {
  std::vector<long> k(nmax + 1, 0);
  bool plateau = false;
  for (std::size_t n = 1; n <= nmax; ++n) {
    if (plateau) {
      k[n] = k[n - 1];
      continue;
    }
    k[n] = static_cast<long>(parts(power(a, n)).ker.dim());
    if (k[n] == k[n - 1]) plateau = true;  // ascending chain, plateau permanent
  }
  return k;
}

std::vector<long> jordan_degrees(const LinearRelation& a, std::size_t nmax) {
  std::vector<long> k = kernel_dims(a, nmax + 1);
  std::vector<long> deg(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) deg[n] = k[n + 1] - k[n];
  return deg;
}

Subspace stable_kernel(const LinearRelation& a) {
  Subspace cur = parts(power(a, 1)).ker;
  for (std::size_t k = 2; k <= 2 * a.d() + 1; ++k) {
    Subspace next = parts(power(a, k)).ker;
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
  return cur;
}

Subspace stable_mul(const LinearRelation& a) {
  Subspace cur = parts(power(a, 1)).mul;
  for (std::size_t k = 2; k <= 2 * a.d() + 1; ++k) {
    Subspace next = parts(power(a, k)).mul;
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace relcalc
