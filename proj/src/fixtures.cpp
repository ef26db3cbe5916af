#include "relcalc/fixtures.hpp"

namespace relcalc {
namespace fixtures {

namespace {
const FieldTag kQ = FieldTag::rationals();
}

LinearRelation ex31() {
  Vec e1 = unit_vec(kQ, 2, 0), e2 = unit_vec(kQ, 2, 1), z = zero_vec(kQ, 2);
  return LinearRelation::from_pairs(kQ, 2,
                                    {concat(z, e1), concat(e1, z), concat(e2, e1)});
}

LinearRelation identity2() { return LinearRelation::identity(kQ, 2); }

Matrix n2_matrix() {
  Matrix m(kQ, 2, 2);
  m.at(0, 1) = Scalar::one(kQ);
  return m;
}

LinearRelation n2_relation() { return LinearRelation::from_graph(n2_matrix()); }

Pencil n2_pencil() { return Pencil(Matrix::identity(kQ, 2), n2_matrix()); }

std::pair<LinearRelation, LinearRelation> sharp(std::size_t n) {
  if (n < 2) throw PreconditionError("sharp: n >= 2 required");
  const std::size_t dim = (n + 1) * (n + 1);
  // x_{k,j}, k = 1..n, j = 0..n laid out first, then y_1..y_{n+1}
  auto x = [&](std::size_t k, std::size_t j) {
    return unit_vec(kQ, dim, (k - 1) * (n + 1) + j);
  };
  auto y = [&](std::size_t l) { return unit_vec(kQ, dim, n * (n + 1) + (l - 1)); };
  const Vec zero = zero_vec(kQ, dim);

  std::vector<Vec> shared;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = n; j >= 1; --j) shared.push_back(concat(x(k, j), x(k, j - 1)));
    shared.push_back(concat(x(k, 0), zero));
  }
  for (std::size_t k = 1; k + 2 <= n; ++k)
    shared.push_back(concat(sub(x(k, n), y(n - k + 1)), sub(x(k + 1, n), y(n - k))));
  shared.push_back(concat(sub(x(n - 1, n), y(2)), y(1)));
  shared.push_back(concat(y(1), zero));
  shared.push_back(concat(x(n, n), y(n)));
  for (std::size_t l = 3; l <= n; ++l) shared.push_back(concat(y(l), y(l - 1)));

  std::vector<Vec> a_rows = shared, b_rows = shared;
  a_rows.push_back(concat(y(n + 1), sub(x(1, n), y(n))));
  b_rows.push_back(concat(y(2), zero));

  return {LinearRelation::from_pairs(kQ, dim, a_rows),
          LinearRelation::from_pairs(kQ, dim, b_rows)};
}

Pencil sing_pencil() {
  Matrix d(kQ, 2, 2);
  d.at(0, 0) = Scalar::one(kQ);
  return Pencil(d, d);
}

Pencil wong_pencil() { return Pencil(n2_matrix(), Matrix::identity(kQ, 2)); }

}  // namespace fixtures
}  // namespace relcalc
