#include "relcalc/perturb.hpp"

#include "relcalc/chains.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace relcalc {

namespace {

LinearRelation meet(const LinearRelation& a, const LinearRelation& b) {
  return LinearRelation(a.d(), intersect(a.space(), b.space()));
}

void check_compatible(const LinearRelation& a, const LinearRelation& b) {
  if (a.d() != b.d()) throw DimensionError("relations with different ambient dimension");
  if (!(a.tag() == b.tag())) throw FieldMismatchError("relations over different fields");
}

}  // namespace

long perturbation_order(const LinearRelation& a, const LinearRelation& b) {
  check_compatible(a, b);
  long meet_dim = static_cast<long>(intersect(a.space(), b.space()).dim());
  return std::max(static_cast<long>(a.dim()) - meet_dim,
                  static_cast<long>(b.dim()) - meet_dim);
}

long s_n(const LinearRelation& a, const LinearRelation& b, std::size_t n) {
  check_compatible(a, b);
  if (n == 0) return 0;
  LinearRelation c = meet(a, b);
  const RelationParts& pc = parts(c);
  const RelationParts& pcn = parts(power(c, n));
  Subspace k = intersect(pc.ker, pcn.ran);
  Subspace mul_an = parts(power(a, n)).mul;
  return static_cast<long>(intersect(k, mul_an).dim()) -
         static_cast<long>(intersect(k, pcn.mul).dim());
}

std::vector<Subspace> enumerate_subspaces(const Subspace& s) {
  const FieldTag tag = s.tag();
  if (tag.kind != FieldKind::GFp || tag.p > 3)
    throw FeasibilityError("subspace enumeration needs GF(p) with p <= 3");
  if (s.dim() > 4) throw FeasibilityError("subspace enumeration needs dim <= 4");
  // all vectors of s via coordinates against its basis
  const std::size_t r = s.dim();
  std::vector<Vec> vectors;
  std::vector<unsigned> counter(r, 0);
  const unsigned p = tag.p;
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= p;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rem = t;
    Vec v = zero_vec(tag, s.ambient());
    for (std::size_t i = 0; i < r; ++i) {
      unsigned coeff = rem % p;
      rem /= p;
      if (coeff)
        v = add(v, scale(Scalar::from_int(tag, coeff), s.basis_row(i)));
    }
    if (!is_zero_vec(v)) vectors.push_back(std::move(v));
  }
  // breadth-first closure under "extend span by one vector"
  std::map<std::string, Subspace> seen;
  auto key_of = [](const Subspace& sub) {
    std::string key = std::to_string(sub.dim()) + ";";
    for (std::size_t i = 0; i < sub.dim(); ++i)
      for (std::size_t c = 0; c < sub.ambient(); ++c)
        key += sub.basis().at(i, c).str() + ",";
    return key;
  };
  std::vector<Subspace> frontier{Subspace::zero(tag, s.ambient())};
  seen.emplace(key_of(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& cur : frontier)
      for (const Vec& v : vectors) {
        if (cur.contains(v)) continue;
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < cur.dim(); ++i) gens.push_back(cur.basis_row(i));
        gens.push_back(v);
        Subspace bigger = Subspace::span(tag, s.ambient(), gens);
        auto [it, inserted] = seen.emplace(key_of(bigger), bigger);
        if (inserted) next.push_back(bigger);
      }
    frontier = std::move(next);
  }
  std::vector<Subspace> out;
  out.reserve(seen.size());
  for (auto& [k, sub] : seen) out.push_back(std::move(sub));
  return out;
}

long s_n_oracle(const LinearRelation& a, const LinearRelation& b, std::size_t n) {
  check_compatible(a, b);
  if (a.tag().kind != FieldKind::GFp || a.tag().p > 3)
    throw FeasibilityError("s_n_oracle needs GF(p), p <= 3");
  if (n == 0) return 0;
  LinearRelation c = meet(a, b);
  Subspace k = intersect(parts(c).ker, parts(power(c, n)).ran);
  Subspace mul_cn = parts(power(c, n)).mul;
  Subspace mul_an = parts(power(a, n)).mul;
  long best = 0;
  for (const Subspace& l : enumerate_subspaces(k)) {
    if (intersect(l, mul_cn).dim() != 0) continue;
    best = std::max(best, static_cast<long>(intersect(l, mul_an).dim()));
  }
  return best;
}

namespace {

// Rows of target's canonical basis extending base to base + target.
std::vector<Vec> extension_rows(const Subspace& base, const Subspace& target) {
  std::vector<Vec> out;
  Subspace cur = base;
  for (std::size_t i = 0; i < target.dim(); ++i) {
    Vec row = target.basis_row(i);
    if (cur.contains(row)) continue;
    out.push_back(row);
    cur = sum(cur, Subspace::span(target.tag(), target.ambient(), {row}));
  }
  return out;
}

}  // namespace

std::vector<LinearRelation> decompose_path(const LinearRelation& a,
                                           const LinearRelation& b) {
  check_compatible(a, b);
  Subspace c = intersect(a.space(), b.space());
  const std::size_t p = static_cast<std::size_t>(
      std::max(a.dim() - c.dim(), b.dim() - c.dim()));
  if (p == 0) return {a};
  std::vector<Vec> fs = extension_rows(c, a.space());
  std::vector<Vec> gs = extension_rows(c, b.space());
  const Vec zero = zero_vec(a.tag(), 2 * a.d());
  while (fs.size() < p) fs.push_back(zero);
  while (gs.size() < p) gs.push_back(zero);

  std::vector<LinearRelation> path;
  path.push_back(a);
  for (std::size_t k = 1; k < p; ++k) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < c.dim(); ++i) rows.push_back(c.basis_row(i));
    for (std::size_t i = 0; i + k < p; ++i) rows.push_back(fs[i]);          // f_1..f_{p-k}
    for (std::size_t i = p - k; i < p; ++i) rows.push_back(gs[i]);          // g_{p-k+1}..g_p
    path.emplace_back(a.d(), Subspace::span(a.tag(), 2 * a.d(), rows));
  }
  path.push_back(b);
  return path;
}

bool PerturbReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<const BoundCheck*> PerturbReport::violations() const {
  std::vector<const BoundCheck*> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(&c);
  return out;
}

namespace {

void push_check(std::vector<BoundCheck>& checks, const std::string& rule, long n,
                long lo, long hi, long value) {
  checks.push_back({rule, n, lo, hi, value, lo <= value && value <= hi});
}

}  // namespace

PerturbReport check_bounds(const LinearRelation& a, const LinearRelation& b,
                           std::size_t nmax) {
  check_compatible(a, b);
  PerturbReport rep;
  rep.order = perturbation_order(a, b);
  const bool a_in_b = b.space().contains(a.space());
  const bool b_in_a = a.space().contains(b.space());
  rep.nested = a_in_b || b_in_a;
  rep.d_a = jordan_degrees(a, nmax);
  rep.d_b = jordan_degrees(b, nmax);
  rep.ker_a = kernel_dims(a, nmax);
  rep.ker_b = kernel_dims(b, nmax);
  rep.singular_chains_a = has_singular_chain(a);
  rep.singular_chains_b = has_singular_chain(b);
  for (std::size_t n = 0; n <= nmax; ++n) {
    rep.s_ab.push_back(s_n(a, b, n));
    rep.s_ba.push_back(s_n(b, a, n));
    rep.s_bracket.push_back(std::max(rep.s_ab.back(), rep.s_ba.back()));
  }

  const long p = rep.order;
  auto& cks = rep.checks;
  for (std::size_t un = 0; un <= nmax; ++un) {
    const long n = static_cast<long>(un);
    const long dq = rep.d_b[un] - rep.d_a[un];
    const long dk = rep.ker_b[un] - rep.ker_a[un];

    if (p <= 1) {
      push_check(cks, "quotient.onedim.twosided", n, -1 - rep.s_ba[un],
                 1 + rep.s_ab[un], dq);
      push_check(cks, "quotient.onedim.cap", n, -(n + 1), n + 1, dq);
      push_check(cks, "s_n.le.n", n, 0, n, rep.s_bracket[un]);
      if (a_in_b) {
        push_check(cks, "quotient.nested.twosided", n, -rep.s_ba[un], 1, dq);
        if (n >= 1) {
          push_check(cks, "quotient.nested.cap", n, -std::max(1l, rep.s_ba[un]),
                     std::max(1l, rep.s_ba[un]), dq);
          push_check(cks, "quotient.nested.capn", n, -n, n, dq);
        }
      } else if (b_in_a) {
        push_check(cks, "quotient.nested.twosided", n, -rep.s_ab[un], 1, -dq);
        if (n >= 1) {
          push_check(cks, "quotient.nested.cap", n, -std::max(1l, rep.s_ab[un]),
                     std::max(1l, rep.s_ab[un]), -dq);
          push_check(cks, "quotient.nested.capn", n, -n, n, -dq);
        }
      }
      if (n >= 1) {
        // levelwise sums of |D_k(B) - D_k(A)| <= 1 + s_k (general) and
        // <= max{1, s_k} (nested); the nested per-level bound comes from
        // the one-dimensional-restriction theorem
        long ssum = 0, msum = 0;
        for (std::size_t k = 0; k < un; ++k) {
          ssum += rep.s_bracket[k];
          msum += std::max(1l, a_in_b ? rep.s_ba[k] : (b_in_a ? rep.s_ab[k] : 0l));
        }
        push_check(cks, "kernel.onedim", n, -(n + ssum), n + ssum, dk);
        push_check(cks, "kernel.onedim.capsum", n, -n * (n + 1) / 2, n * (n + 1) / 2, dk);
        if (rep.nested) {
          push_check(cks, "kernel.nested", n, -msum, msum, dk);
          push_check(cks, "kernel.nested.capsum", n, -(1 + (n - 1) * n / 2),
                     1 + (n - 1) * n / 2, dk);
        }
      }
    }

    push_check(cks, "quotient.pdim", n, -(n + 1) * p, (n + 1) * p, dq);
    if (rep.nested && n >= 1)
      push_check(cks, "quotient.pdim.nested", n, -n * p, n * p, dq);
    if (n >= 1) {
      push_check(cks, "kernel.pdim", n, -n * (n + 1) / 2 * p, n * (n + 1) / 2 * p, dk);
      if (rep.nested)
        push_check(cks, "kernel.pdim.nested", n, -(1 + (n - 1) * n / 2) * p,
                   (1 + (n - 1) * n / 2) * p, dk);
    }

    if (!rep.singular_chains_a && !rep.singular_chains_b) {
      push_check(cks, "quotient.nosing", n, -p, p, dq);
      if (n >= 1) push_check(cks, "kernel.nosing", n, -n * p, n * p, dk);
      long kr_a = static_cast<long>(
          intersect(parts(a).ker, parts(power(a, un)).ran).dim());
      long kr_b = static_cast<long>(
          intersect(parts(b).ker, parts(power(b, un)).ran).dim());
      push_check(cks, "kerran.nosing", n, -p, p, kr_b - kr_a);
    }
  }
  return rep;
}

}  // namespace relcalc
