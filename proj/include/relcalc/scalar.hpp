#ifndef RELCALC_SCALAR_HPP
#define RELCALC_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "relcalc/errors.hpp"

namespace relcalc {

enum class FieldKind { Q, Qi, GFp };

// Which exact field a computation lives in. Every scalar, matrix and
// subspace carries one; mixing tags throws FieldMismatchError.
struct FieldTag {
  FieldKind kind = FieldKind::Q;
  unsigned p = 0;  // prime modulus, GFp only

  static FieldTag rationals() { return {FieldKind::Q, 0}; }
  static FieldTag gaussian_rationals() { return {FieldKind::Qi, 0}; }
  static FieldTag prime_field(unsigned p);  // validates 2 <= p <= 97, p prime

  bool operator==(const FieldTag&) const = default;
  std::string name() const;
};

// Exact field element: rational, Gaussian rational, or residue mod p.
class Scalar {
 public:
  Scalar() : tag_(FieldTag::rationals()), v_(mpq_class(0)) {}

  static Scalar zero(const FieldTag& tag);
  static Scalar one(const FieldTag& tag);
  static Scalar from_int(const FieldTag& tag, long value);
  static Scalar fraction(const FieldTag& tag, long num, long den);
  static Scalar rational(const FieldTag& tag, mpq_class q);
  static Scalar gaussian(mpq_class re, mpq_class im);
  static Scalar residue(unsigned p, long value);
  // Accepts "a", "a/b", "a/b+c/di", "2-3i", "i", "-i".
  static Scalar parse(const FieldTag& tag, const std::string& text);

  const FieldTag& tag() const { return tag_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar conj() const;  // identity except over Qi

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  // Component access; only valid for the matching kind.
  const mpq_class& q_re() const;
  const mpq_class& q_im() const;
  unsigned long gf() const;

 private:
  using QiVal = std::pair<mpq_class, mpq_class>;
  Scalar(FieldTag tag, std::variant<mpq_class, QiVal, unsigned long> v)
      : tag_(tag), v_(std::move(v)) {}
  void check_same(const Scalar& o) const;

  FieldTag tag_;
  std::variant<mpq_class, QiVal, unsigned long> v_;
};

// Modular inverse in GF(p); throws PreconditionError on zero.
unsigned long gf_inverse(unsigned long a, unsigned long p);

}  // namespace relcalc

#endif
