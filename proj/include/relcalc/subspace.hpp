#ifndef RELCALC_SUBSPACE_HPP
#define RELCALC_SUBSPACE_HPP

#include <vector>

#include "relcalc/matrix.hpp"

namespace relcalc {

// Subspace of F^n held by its canonical basis: the RREF of any generating
// set with zero rows dropped. Two subspaces are equal iff the canonical
// bases are entry-wise equal.
class Subspace {
 public:
  static Subspace zero(const FieldTag& tag, std::size_t ambient);
  static Subspace full(const FieldTag& tag, std::size_t ambient);
  static Subspace span(const FieldTag& tag, std::size_t ambient,
                       const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  const FieldTag& tag() const { return basis_.tag(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Residual of v after reduction by the canonical basis; zero iff v is a member.
  Vec reduce(const Vec& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(std::size_t ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  Matrix basis_;  // RREF, no zero rows
};

Subspace sum(const Subspace& u, const Subspace& v);
// Computed through the kernel of the stacked coefficient system on the
// two bases (Zassenhaus-style); no new elimination primitive.
Subspace intersect(const Subspace& u, const Subspace& v);
// dim v - dim u for u a subspace of v; throws PreconditionError otherwise.
std::size_t quotient_dim(const Subspace& v, const Subspace& u);

// {x : m x = 0}
Subspace kernel(const Matrix& m);
// Rows span the annihilator of s under the plain bilinear pairing;
// kernel(constraints(s)) == s.
Matrix constraints(const Subspace& s);
// {m x : x in s}
Subspace image(const Matrix& m, const Subspace& s);
// {x : m x in s}
Subspace preimage(const Matrix& m, const Subspace& s);
// Coordinate projection of s onto positions [from, from+len).
Subspace project(const Subspace& s, std::size_t from, std::size_t len);

}  // namespace relcalc

#endif
