#include "relcalc/poly.hpp"

namespace relcalc {

Poly::Poly(const FieldTag& tag, std::vector<Scalar> coeffs)
    : tag_(tag), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.tag() == tag_)) throw FieldMismatchError("polynomial coefficient field mismatch");
  normalize();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.tag(), {c}); }

Poly Poly::linear(const Scalar& c0, const Scalar& c1) { return Poly(c0.tag(), {c0, c1}); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(tag_);
}

Scalar Poly::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (!(tag_ == o.tag_)) throw FieldMismatchError("polynomial field mismatch");
  std::vector<Scalar> out;
  const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) + o.coeff(i));
  return Poly(tag_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return Poly(tag_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!(tag_ == o.tag_)) throw FieldMismatchError("polynomial field mismatch");
  if (is_zero() || o.is_zero()) return Poly(tag_);
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(tag_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return Poly(tag_, std::move(out));
}

Poly Poly::div_exact(const Poly& o) const {
  if (o.is_zero()) throw PreconditionError("polynomial division by zero");
  if (is_zero()) return Poly(tag_);
  if (degree() < o.degree()) throw PreconditionError("inexact polynomial division");
  std::vector<Scalar> rem = coeffs_;
  std::vector<Scalar> quot(degree() - o.degree() + 1, Scalar::zero(tag_));
  Scalar lead_inv = o.leading().inverse();
  for (long k = degree() - o.degree(); k >= 0; --k) {
    Scalar factor = rem[k + o.degree()] * lead_inv;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (long i = 0; i <= o.degree(); ++i)
      rem[k + i] = rem[k + i] - factor * o.coeffs_[i];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
  return Poly(tag_, std::move(quot));
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(tag_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")";
    if (i == 1) out += "*s";
    if (i > 1) out += "*s^" + std::to_string(i);
  }
  return out;
}

}  // namespace relcalc
