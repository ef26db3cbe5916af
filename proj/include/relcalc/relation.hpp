#ifndef RELCALC_RELATION_HPP
#define RELCALC_RELATION_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "relcalc/subspace.hpp"

namespace relcalc {

// dom/ran/ker/mul of a relation, each a subspace of F^d.
struct RelationParts {
  Subspace dom, ran, ker, mul;
};

// A linear relation in F^d: a subspace of F^d x F^d. A basis vector
// (x | y) encodes the pair {x, y}, first d coordinates = x.
class LinearRelation {
 public:
  LinearRelation(std::size_t d, Subspace space);
  static LinearRelation from_pairs(const FieldTag& tag, std::size_t d,
                                   const std::vector<Vec>& pairs);
  static LinearRelation from_graph(const Matrix& m);
  static LinearRelation identity(const FieldTag& tag, std::size_t d);

  std::size_t d() const { return d_; }
  const FieldTag& tag() const { return space_.tag(); }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  bool contains_pair(const Vec& x, const Vec& y) const;

  bool operator==(const LinearRelation& o) const {
    return d_ == o.d_ && space_ == o.space_;
  }
  bool operator!=(const LinearRelation& o) const { return !(*this == o); }

 private:
  struct Cache;
  std::size_t d_;
  Subspace space_;
  std::shared_ptr<Cache> cache_;

  friend LinearRelation power(const LinearRelation&, std::size_t);
  friend const RelationParts& parts(const LinearRelation&);
};

LinearRelation inverse(const LinearRelation& a);
// AB = {(x|z) : exists y with (x|y) in B and (y|z) in A}.
LinearRelation compose(const LinearRelation& a, const LinearRelation& b);
// A^0 = identity graph, A^n = A A^{n-1}; results cached per relation object.
LinearRelation power(const LinearRelation& a, std::size_t n);
const RelationParts& parts(const LinearRelation& a);
// {(x | y+z) : (x|y) in A, (x|z) in B}
LinearRelation op_sum(const LinearRelation& a, const LinearRelation& b);
// A - lambda = {(x, y - lambda x) : (x|y) in A}
LinearRelation scale_shift(const LinearRelation& a, const Scalar& lambda);

// A spectral point: an exact field element or the infinity token.
class Eigenvalue {
 public:
  static Eigenvalue infinity() { return Eigenvalue(std::nullopt); }
  static Eigenvalue of(Scalar v) { return Eigenvalue(std::move(v)); }
  bool is_infinity() const { return !value_.has_value(); }
  const Scalar& value() const { return *value_; }
  std::string str() const { return value_ ? value_->str() : "inf"; }
  bool operator==(const Eigenvalue& o) const {
    if (is_infinity() != o.is_infinity()) return false;
    return is_infinity() || *value_ == *o.value_;
  }

 private:
  explicit Eigenvalue(std::optional<Scalar> v) : value_(std::move(v)) {}
  std::optional<Scalar> value_;
};

// A - lambda for finite lambda, A^{-1} for lambda = infinity.
LinearRelation relation_at(const LinearRelation& a, const Eigenvalue& lambda);

// D_n = dim N(A^{n+1}) - dim N(A^n) for n = 0..nmax.
std::vector<long> jordan_degrees(const LinearRelation& a, std::size_t nmax);
// dim N(A^n) for n = 0..nmax.
std::vector<long> kernel_dims(const LinearRelation& a, std::size_t nmax);
// Stabilized N(A^k) / mul(A^k); ascending chains, plateau is permanent.
Subspace stable_kernel(const LinearRelation& a);
Subspace stable_mul(const LinearRelation& a);

}  // namespace relcalc

#endif
