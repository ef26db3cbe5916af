#include "relcalc/scalar.hpp"

#include <cctype>
#include <sstream>

namespace relcalc {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

mpq_class make_canonical(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class parse_rational_token(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty scalar token");
  std::string t = tok;
  // mpq set_str accepts "a" and "a/b"; validate characters first.
  size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) throw ParseError("bad scalar '" + tok + "'");
  bool seen_slash = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '/') {
      if (seen_slash || i + 1 == t.size()) throw ParseError("bad scalar '" + tok + "'");
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw ParseError("bad scalar '" + tok + "'");
  }
  if (t[0] == '+') t = t.substr(1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad scalar '" + tok + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + tok + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

FieldTag FieldTag::prime_field(unsigned p) {
  if (p < 2 || p > 97 || !is_prime(p))
    throw PreconditionError("GF modulus must be a prime in [2, 97]");
  return {FieldKind::GFp, p};
}

std::string FieldTag::name() const {
  switch (kind) {
    case FieldKind::Q: return "Q";
    case FieldKind::Qi: return "Qi";
    case FieldKind::GFp: return "GF(" + std::to_string(p) + ")";
  }
  return "?";
}

unsigned long gf_inverse(unsigned long a, unsigned long p) {
  a %= p;
  if (a == 0) throw PreconditionError("inverse of zero in GF(p)");
  long t = 0, new_t = 1;
  long r = static_cast<long>(p), new_r = static_cast<long>(a);
  while (new_r != 0) {
    long quot = r / new_r;
    t -= quot * new_t; std::swap(t, new_t);
    r -= quot * new_r; std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<long>(p);
  return static_cast<unsigned long>(t);
}

Scalar Scalar::zero(const FieldTag& tag) { return from_int(tag, 0); }
Scalar Scalar::one(const FieldTag& tag) { return from_int(tag, 1); }

Scalar Scalar::from_int(const FieldTag& tag, long value) {
  switch (tag.kind) {
    case FieldKind::Q: return Scalar(tag, mpq_class(value));
    case FieldKind::Qi: return Scalar(tag, QiVal(mpq_class(value), mpq_class(0)));
    case FieldKind::GFp: {
      long r = value % static_cast<long>(tag.p);
      if (r < 0) r += tag.p;
      return Scalar(tag, static_cast<unsigned long>(r));
    }
  }
  throw PreconditionError("bad field tag");
}

Scalar Scalar::fraction(const FieldTag& tag, long num, long den) {
  switch (tag.kind) {
    case FieldKind::Q: return Scalar(tag, make_canonical(num, den));
    case FieldKind::Qi: return Scalar(tag, QiVal(make_canonical(num, den), mpq_class(0)));
    case FieldKind::GFp: {
      Scalar n = from_int(tag, num), d = from_int(tag, den);
      return n / d;
    }
  }
  throw PreconditionError("bad field tag");
}

Scalar Scalar::rational(const FieldTag& tag, mpq_class q) {
  q.canonicalize();
  if (tag.kind == FieldKind::Q) return Scalar(tag, std::move(q));
  if (tag.kind == FieldKind::Qi) return Scalar(tag, QiVal(std::move(q), mpq_class(0)));
  throw FieldMismatchError("rational() needs Q or Qi tag");
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  return Scalar(FieldTag::gaussian_rationals(), QiVal(std::move(re), std::move(im)));
}

Scalar Scalar::residue(unsigned p, long value) {
  return from_int(FieldTag::prime_field(p), value);
}

Scalar Scalar::parse(const FieldTag& tag, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty scalar");
  if (tag.kind == FieldKind::GFp) {
    // accept "a" or "a/b" with b invertible
    auto q = parse_rational_token(t);
    mpz_class num = q.get_num(), den = q.get_den();
    long p = tag.p;
    mpz_class nm = num % p, dm = den % p;
    long n = nm.get_si(), d = dm.get_si();
    if (n < 0) n += p;
    if (d < 0) d += p;
    Scalar nn = from_int(tag, n), dd = from_int(tag, d);
    return nn / dd;
  }
  if (tag.kind == FieldKind::Q) {
    if (t.back() == 'i') throw ParseError("imaginary literal over Q: '" + text + "'");
    return Scalar(tag, parse_rational_token(t));
  }
  // Qi: split into real part and optional imaginary tail ending in 'i'
  if (t.back() == 'i') {
    // find separating sign after position 0
    size_t split = std::string::npos;
    for (size_t i = 1; i + 1 < t.size(); ++i)
      if (t[i] == '+' || t[i] == '-') split = i;  // last separator wins
    std::string re_tok, im_tok;
    if (split == std::string::npos) {
      re_tok = "0";
      im_tok = t.substr(0, t.size() - 1);
    } else {
      re_tok = t.substr(0, split);
      im_tok = t.substr(split, t.size() - split - 1);
    }
    if (im_tok.empty() || im_tok == "+") im_tok = "1";
    if (im_tok == "-") im_tok = "-1";
    return gaussian(parse_rational_token(re_tok), parse_rational_token(im_tok));
  }
  return Scalar(tag, QiVal(parse_rational_token(t), mpq_class(0)));
}

bool Scalar::is_zero() const {
  switch (tag_.kind) {
    case FieldKind::Q: return std::get<mpq_class>(v_) == 0;
    case FieldKind::Qi: {
      const auto& z = std::get<QiVal>(v_);
      return z.first == 0 && z.second == 0;
    }
    case FieldKind::GFp: return std::get<unsigned long>(v_) == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (tag_.kind) {
    case FieldKind::Q: return std::get<mpq_class>(v_) == 1;
    case FieldKind::Qi: {
      const auto& z = std::get<QiVal>(v_);
      return z.first == 1 && z.second == 0;
    }
    case FieldKind::GFp: return std::get<unsigned long>(v_) == 1;
  }
  return false;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(tag_ == o.tag_))
    throw FieldMismatchError("scalars from different fields: " + tag_.name() + " vs " + o.tag_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  switch (tag_.kind) {
    case FieldKind::Q:
      return Scalar(tag_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    case FieldKind::Qi: {
      const auto& a = std::get<QiVal>(v_);
      const auto& b = std::get<QiVal>(o.v_);
      return Scalar(tag_, QiVal(a.first + b.first, a.second + b.second));
    }
    case FieldKind::GFp:
      return Scalar(tag_, (std::get<unsigned long>(v_) + std::get<unsigned long>(o.v_)) % tag_.p);
  }
  throw PreconditionError("bad field tag");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  switch (tag_.kind) {
    case FieldKind::Q: return Scalar(tag_, mpq_class(-std::get<mpq_class>(v_)));
    case FieldKind::Qi: {
      const auto& a = std::get<QiVal>(v_);
      return Scalar(tag_, QiVal(-a.first, -a.second));
    }
    case FieldKind::GFp: {
      unsigned long r = std::get<unsigned long>(v_);
      return Scalar(tag_, r == 0 ? 0ul : tag_.p - r);
    }
  }
  throw PreconditionError("bad field tag");
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  switch (tag_.kind) {
    case FieldKind::Q:
      return Scalar(tag_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    case FieldKind::Qi: {
      const auto& a = std::get<QiVal>(v_);
      const auto& b = std::get<QiVal>(o.v_);
      return Scalar(tag_, QiVal(a.first * b.first - a.second * b.second,
                                a.first * b.second + a.second * b.first));
    }
    case FieldKind::GFp:
      return Scalar(tag_, (std::get<unsigned long>(v_) * std::get<unsigned long>(o.v_)) % tag_.p);
  }
  throw PreconditionError("bad field tag");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  switch (tag_.kind) {
    case FieldKind::Q:
      return Scalar(tag_, mpq_class(1 / std::get<mpq_class>(v_)));
    case FieldKind::Qi: {
      const auto& a = std::get<QiVal>(v_);
      mpq_class n = a.first * a.first + a.second * a.second;
      return Scalar(tag_, QiVal(mpq_class(a.first / n), mpq_class(-a.second / n)));
    }
    case FieldKind::GFp:
      return Scalar(tag_, gf_inverse(std::get<unsigned long>(v_), tag_.p));
  }
  throw PreconditionError("bad field tag");
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::conj() const {
  if (tag_.kind != FieldKind::Qi) return *this;
  const auto& a = std::get<QiVal>(v_);
  return Scalar(tag_, QiVal(a.first, -a.second));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(tag_ == o.tag_)) return false;
  switch (tag_.kind) {
    case FieldKind::Q: return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    case FieldKind::Qi: {
      const auto& a = std::get<QiVal>(v_);
      const auto& b = std::get<QiVal>(o.v_);
      return a.first == b.first && a.second == b.second;
    }
    case FieldKind::GFp: return std::get<unsigned long>(v_) == std::get<unsigned long>(o.v_);
  }
  return false;
}

std::string Scalar::str() const {
  switch (tag_.kind) {
    case FieldKind::Q: return rational_str(std::get<mpq_class>(v_));
    case FieldKind::Qi: {
      const auto& z = std::get<QiVal>(v_);
      if (z.second == 0) return rational_str(z.first);
      std::string im = rational_str(z.second) + "i";
      if (z.first == 0) return im;
      return z.second < 0 ? rational_str(z.first) + im
                          : rational_str(z.first) + "+" + im;
    }
    case FieldKind::GFp: return std::to_string(std::get<unsigned long>(v_));
  }
  return "?";
}

const mpq_class& Scalar::q_re() const {
  if (tag_.kind == FieldKind::Q) return std::get<mpq_class>(v_);
  return std::get<QiVal>(v_).first;
}

const mpq_class& Scalar::q_im() const {
  static const mpq_class kZero(0);
  if (tag_.kind == FieldKind::Q) return kZero;
  return std::get<QiVal>(v_).second;
}

unsigned long Scalar::gf() const { return std::get<unsigned long>(v_); }

}  // namespace relcalc
