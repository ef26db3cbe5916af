#ifndef RELCALC_POLY_HPP
#define RELCALC_POLY_HPP

#include <vector>

#include "relcalc/scalar.hpp"

namespace relcalc {

// Univariate polynomial over one exact field, ascending coefficients,
// normalized (no trailing zeros; the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(const FieldTag& tag) : tag_(tag) {}
  Poly(const FieldTag& tag, std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c);
  static Poly linear(const Scalar& c0, const Scalar& c1);  // c0 + c1 s

  const FieldTag& tag() const { return tag_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  // Exact quotient; throws PreconditionError when the division leaves a remainder.
  Poly div_exact(const Poly& o) const;
  Scalar eval(const Scalar& at) const;

  bool operator==(const Poly& o) const { return tag_ == o.tag_ && coeffs_ == o.coeffs_; }
  std::string str() const;

 private:
  void normalize();
  FieldTag tag_;
  std::vector<Scalar> coeffs_;
};

}  // namespace relcalc

#endif
