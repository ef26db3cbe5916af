#include "relcalc/pencil.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relcalc {

Pencil::Pencil(Matrix e, Matrix f) : E(std::move(e)), F(std::move(f)) {
  if (E.rows() != E.cols() || F.rows() != F.cols() || E.rows() != F.rows())
    throw DimensionError("pencil matrices must be square and of equal size");
  if (!(E.tag() == F.tag())) throw FieldMismatchError("pencil matrices over different fields");
}

RankOnePencil::RankOnePencil(Vec u_, Vec v_, Vec w_)
    : u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {
  if (u.size() != v.size() || u.size() != w.size())
    throw DimensionError("rank-one pencil vectors of mixed length");
  if (is_zero_vec(w)) throw PreconditionError("rank-one pencil needs w != 0");
  if (is_zero_vec(u) && is_zero_vec(v))
    throw PreconditionError("rank-one pencil needs (u, v) != (0, 0)");
}

PencilProfile profile(const Pencil& p) {
  const FieldTag tag = p.tag();
  const std::size_t d = p.d();
  std::vector<std::vector<Poly>> m(d, std::vector<Poly>(d, Poly(tag)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      m[r][c] = Poly(tag, {-p.F.at(r, c), p.E.at(r, c)});

  bool negate = false;
  Poly prev = Poly::constant(Scalar::one(tag));
  std::size_t rank = 0;
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t pi = d, pj = d;
    for (std::size_t i = k; i < d; ++i)
      for (std::size_t j = k; j < d; ++j)
        if (!m[i][j].is_zero() &&
            (pi == d || m[i][j].degree() < m[pi][pj].degree())) {
          pi = i;
          pj = j;
        }
    if (pi == d) break;
    if (pi != k) {
      std::swap(m[pi], m[k]);
      negate = !negate;
    }
    if (pj != k) {
      for (std::size_t i = 0; i < d; ++i) std::swap(m[i][pj], m[i][k]);
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < d; ++r) {
      for (std::size_t c = k + 1; c < d; ++c)
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]).div_exact(prev);
      m[r][k] = Poly(tag);
    }
    prev = m[k][k];
    ++rank;
  }

  PencilProfile out{Poly(tag), rank == d, rank};
  if (rank == d) {
    Poly det = d == 0 ? Poly::constant(Scalar::one(tag)) : m[d - 1][d - 1];
    out.det_poly = negate ? -det : det;
  }
  return out;
}

LinearRelation to_relation(const Pencil& p) {
  const std::size_t d = p.d();
  Matrix block(p.tag(), d, 2 * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      block.at(r, c) = p.F.at(r, c);
      block.at(r, d + c) = -p.E.at(r, c);
    }
  return LinearRelation(d, kernel(block));
}

Pencil dual(const Pencil& p) { return Pencil(p.F, p.E); }

std::vector<long> jordan_dims_at(const Pencil& p, const Eigenvalue& lambda,
                                 std::size_t nmax) {
  if (lambda.is_infinity()) return jordan_degrees(to_relation(dual(p)), nmax);
  return jordan_degrees(scale_shift(to_relation(p), lambda.value()), nmax);
}

namespace {

Vec conj_vec(const Vec& v) {
  Vec out = v;
  for (auto& x : out) x = x.conj();
  return out;
}

}  // namespace

Pencil apply_perturbation(const Pencil& p, const RankOnePencil& q) {
  if (q.w.size() != p.d()) throw DimensionError("perturbation dimension mismatch");
  return Pencil(p.E + outer(q.w, conj_vec(q.u)), p.F + outer(q.w, conj_vec(q.v)));
}

bool satisfies_inclusion(const Pencil& p, const RankOnePencil& q) {
  if (q.w.size() != p.d()) throw DimensionError("perturbation dimension mismatch");
  LinearRelation rel = to_relation(p);
  Vec func = concat(conj_vec(q.v), scale(-Scalar::one(p.tag()), conj_vec(q.u)));
  for (std::size_t i = 0; i < rel.dim(); ++i)
    if (!dot(func, rel.space().basis_row(i)).is_zero()) return false;
  return true;
}

std::vector<Subspace> wong(const Pencil& p, std::size_t nmax) {
  std::vector<Subspace> w;
  w.push_back(Subspace::zero(p.tag(), p.d()));
  bool plateau = false;
  for (std::size_t i = 1; i <= nmax; ++i) {
    if (plateau) {
      w.push_back(w.back());
      continue;
    }
    Subspace next = preimage(p.E, image(p.F, w.back()));
    if (next.dim() == w.back().dim()) plateau = true;  // ascending, plateau permanent
    w.push_back(std::move(next));
  }
  return w;
}

namespace {

// Positive divisors via trial division; *complete goes false when a
// composite cofactor beyond the cap is left unfactored (its own divisors
// are then missing from the list).
std::vector<mpz_class> positive_divisors(const mpz_class& value, bool* complete) {
  mpz_class n = abs(value);
  std::vector<mpz_class> divs{1};
  if (n <= 1) return divs;
  std::map<mpz_class, unsigned> factors;
  mpz_class m = n;
  for (mpz_class pr = 2; pr <= 1000000 && m > 1; pr += (pr == 2 ? 1 : 2)) {
    if (pr * pr > m) break;
    while (m % pr == 0) {
      ++factors[pr];
      mpz_class t = m / pr;
      m = t;
    }
  }
  if (m > 1) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 25) == 0) *complete = false;
    ++factors[m];
  }
  for (const auto& [prime, mult] : factors) {
    std::vector<mpz_class> next;
    mpz_class pw = 1;
    for (unsigned e = 0; e <= mult; ++e) {
      for (const auto& d : divs) next.push_back(d * pw);
      pw *= prime;
      if (next.size() > 8192) {  // candidate cap; flag rather than stall
        *complete = false;
        break;
      }
    }
    divs = std::move(next);
  }
  return divs;
}

struct Gint {
  mpz_class re, im;
};

bool gaussian_divides(const Gint& z, const Gint& g) {
  mpz_class norm = z.re * z.re + z.im * z.im;
  if (norm == 0) return false;
  // g * conj(z) / N(z) must have integral parts
  mpz_class re = g.re * z.re + g.im * z.im;
  mpz_class im = g.im * z.re - g.re * z.im;
  return re % norm == 0 && im % norm == 0;
}

std::vector<Gint> gaussian_divisors(const Gint& g, bool* complete) {
  std::vector<Gint> out;
  mpz_class norm = g.re * g.re + g.im * g.im;
  if (norm == 0) return out;
  if (norm > mpz_class(10000000000L)) {
    *complete = false;
    out.push_back({1, 0});
    out.push_back(g);
    return out;
  }
  for (const auto& m : positive_divisors(norm, complete)) {
    for (mpz_class x = 0; x * x <= m; ++x) {
      mpz_class y2 = m - x * x;
      mpz_class y = sqrt(y2);
      if (y * y != y2) continue;
      Gint cand{x, y};
      if (gaussian_divides(cand, g)) out.push_back(cand);
      if (y != 0) {
        Gint c2{x, -y};
        if (gaussian_divides(c2, g)) out.push_back(c2);
      }
    }
  }
  return out;
}

void deflate_root(Poly& poly, const Scalar& root, bool* found_any) {
  Poly lin = Poly::linear(-root, Scalar::one(root.tag()));
  while (!poly.is_zero() && poly.degree() >= 1 && poly.eval(root).is_zero()) {
    poly = poly.div_exact(lin);
    *found_any = true;
  }
}

}  // namespace

SpectrumScan spectrum_scan(const Pencil& p) {
  SpectrumScan scan;
  PencilProfile prof = profile(p);
  if (!prof.regular) return scan;  // no determinant roots to resolve
  const FieldTag tag = p.tag();
  Poly work = prof.det_poly;
  std::set<std::string> seen;
  auto take_root = [&](const Scalar& root) {
    bool hit = false;
    deflate_root(work, root, &hit);
    if (hit && seen.insert(root.str()).second)
      scan.finite.push_back(Eigenvalue::of(root));
  };

  if (tag.kind == FieldKind::GFp) {
    for (unsigned r = 0; r < tag.p && !work.is_zero() && work.degree() >= 1; ++r)
      take_root(Scalar::from_int(tag, r));
  } else if (tag.kind == FieldKind::Q) {
    // clear denominators, strip s^t, then rational-root candidates
    mpz_class lcm_den = 1;
    for (const auto& c : work.coeffs()) lcm_den = lcm(lcm_den, c.q_re().get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : work.coeffs()) {
      mpq_class scaled(c.q_re() * lcm_den);
      ic.push_back(scaled.get_num());
    }
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) take_root(Scalar::zero(tag));
    if (!work.is_zero() && work.degree() >= 1) {
      bool complete = true;
      auto nums = positive_divisors(ic[low], &complete);
      auto dens = positive_divisors(ic.back(), &complete);
      if (!complete) scan.fully_resolved = false;
      for (const auto& r : nums)
        for (const auto& s : dens) {
          if (gcd(r, s) != 1) continue;
          mpq_class q(r, s);
          q.canonicalize();
          take_root(Scalar::rational(tag, q));
          take_root(Scalar::rational(tag, mpq_class(-q)));
          if (work.is_zero() || work.degree() < 1) break;
        }
    }
  } else {
    // Qi: Gaussian-integer divisor (norm) search
    mpz_class lcm_den = 1;
    for (const auto& c : work.coeffs()) {
      lcm_den = lcm(lcm_den, c.q_re().get_den());
      lcm_den = lcm(lcm_den, c.q_im().get_den());
    }
    std::vector<Gint> ic;
    for (const auto& c : work.coeffs()) {
      mpq_class sre(c.q_re() * lcm_den), sim(c.q_im() * lcm_den);
      ic.push_back({sre.get_num(), sim.get_num()});
    }
    std::size_t low = 0;
    while (low < ic.size() && ic[low].re == 0 && ic[low].im == 0) ++low;
    if (low > 0) take_root(Scalar::zero(tag));
    if (!work.is_zero() && work.degree() >= 1) {
      bool complete = true;
      auto nums = gaussian_divisors(ic[low], &complete);
      auto dens = gaussian_divisors(ic.back(), &complete);
      if (!complete) scan.fully_resolved = false;
      for (const auto& pn : nums) {
        // all associates of the numerator: p, ip, -p, -ip
        Gint assoc[4] = {pn, {-pn.im, pn.re}, {-pn.re, -pn.im}, {pn.im, -pn.re}};
        for (const auto& qd : dens)
          for (const auto& pa : assoc) {
            mpz_class qn = qd.re * qd.re + qd.im * qd.im;
            mpq_class re((pa.re * qd.re + pa.im * qd.im), qn);
            mpq_class im((pa.im * qd.re - pa.re * qd.im), qn);
            re.canonicalize();
            im.canonicalize();
            take_root(Scalar::gaussian(re, im));
            if (work.is_zero() || work.degree() < 1) break;
          }
      }
    }
  }
  if (!work.is_zero() && work.degree() >= 1) scan.fully_resolved = false;
  return scan;
}

std::vector<Eigenvalue> auto_lambdas(const Pencil& p, const Pencil& perturbed) {
  std::vector<Eigenvalue> out;
  std::set<std::string> seen;
  auto add = [&](const Eigenvalue& l) {
    if (seen.insert(l.str()).second) out.push_back(l);
  };
  add(Eigenvalue::of(Scalar::zero(p.tag())));
  for (const auto& l : spectrum_scan(p).finite) add(l);
  for (const auto& l : spectrum_scan(perturbed).finite) add(l);
  add(Eigenvalue::infinity());
  return out;
}

bool BoundReport::pass() const {
  for (const auto& l : lambdas)
    for (const auto& c : l.checks)
      if (!c.pass) return false;
  for (const auto& c : wong_checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void push_check(std::vector<BoundCheck>& checks, const std::string& rule, long n,
                long lo, long hi, long value) {
  checks.push_back({rule, n, lo, hi, value, lo <= value && value <= hi});
}

void case_bounds(const std::string& prefix, bool reg_base, bool reg_pert,
                 bool refined, long n, long diff, std::vector<BoundCheck>& checks) {
  if (reg_base && reg_pert) {
    push_check(checks, prefix + ".reg_reg", n, -1, 1, diff);
  } else if (reg_base && !reg_pert) {
    push_check(checks, prefix + ".reg_sing", n, -1 - n, 1, diff);
    if (refined) push_check(checks, prefix + ".incl.reg_sing", n, -n, 1, diff);
  } else if (!reg_base && reg_pert) {
    push_check(checks, prefix + ".sing_reg", n, -1, n + 1, diff);
    if (refined) push_check(checks, prefix + ".incl.sing_reg", n, -1, n, diff);
  } else {
    push_check(checks, prefix + ".sing_sing", n, -(n + 1), n + 1, diff);
    if (refined) push_check(checks, prefix + ".incl.sing_sing", n, -n, n, diff);
  }
}

}  // namespace

BoundReport pencil_bound_report(const Pencil& p, const RankOnePencil& q,
                                const std::vector<Eigenvalue>& lambdas,
                                std::size_t nmax) {
  BoundReport rep;
  Pencil pert = apply_perturbation(p, q);
  rep.regular_base = profile(p).regular;
  rep.regular_pert = profile(pert).regular;
  rep.case_name = std::string(rep.regular_base ? "regular" : "singular") + "/" +
                  (rep.regular_pert ? "regular" : "singular");
  rep.inclusion = satisfies_inclusion(p, q);
  rep.untested_spectrum =
      !spectrum_scan(p).fully_resolved || !spectrum_scan(pert).fully_resolved;

  LinearRelation base_rel = to_relation(p);
  LinearRelation pert_rel = to_relation(pert);
  rep.relation_order = perturbation_order(base_rel, pert_rel);
  rep.dual_relation_order =
      perturbation_order(to_relation(dual(p)), to_relation(dual(pert)));
  if (rep.inclusion)
    rep.inclusion_relation_verified = pert_rel.space().contains(base_rel.space());

  for (const auto& lambda : lambdas) {
    PencilLambdaChecks lc{lambda, {}, {}, {}, {}, {}};
    LinearRelation a = relation_at(base_rel, lambda);
    LinearRelation b = relation_at(pert_rel, lambda);
    lc.d_base = jordan_degrees(a, nmax);
    lc.d_pert = jordan_degrees(b, nmax);
    for (std::size_t n = 0; n <= nmax; ++n) {
      lc.s_base_pert.push_back(s_n(a, b, n));
      lc.s_pert_base.push_back(s_n(b, a, n));
    }
    for (std::size_t un = 1; un <= nmax; ++un) {
      const long n = static_cast<long>(un);
      case_bounds("pencil", rep.regular_base, rep.regular_pert, rep.inclusion, n,
                  lc.d_pert[un] - lc.d_base[un], lc.checks);
      push_check(lc.checks, "pencil.s_n.le.n", n, 0, n,
                 std::max(lc.s_base_pert[un], lc.s_pert_base[un]));
    }
    rep.lambdas.push_back(std::move(lc));
  }

  std::vector<Subspace> wb = wong(p, nmax + 1);
  std::vector<Subspace> wp = wong(pert, nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    rep.wong_q_base.push_back(static_cast<long>(wb[n + 1].dim() - wb[n].dim()));
    rep.wong_q_pert.push_back(static_cast<long>(wp[n + 1].dim() - wp[n].dim()));
  }
  for (std::size_t un = 1; un <= nmax; ++un)
    case_bounds("wong", rep.regular_base, rep.regular_pert, false,
                static_cast<long>(un), rep.wong_q_pert[un] - rep.wong_q_base[un],
                rep.wong_checks);
  return rep;
}

}  // namespace relcalc
