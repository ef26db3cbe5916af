#include "relcalc/chains.hpp"

#include <algorithm>

namespace relcalc {

ChainTuple::ChainTuple(std::vector<Vec> head_first) : entries_(std::move(head_first)) {
  if (entries_.empty()) throw PreconditionError("chain tuple must have length >= 1");
  for (const auto& e : entries_)
    if (e.size() != entries_.front().size())
      throw DimensionError("chain entries of mixed length");
}

bool ChainTuple::is_zero() const {
  for (const auto& e : entries_)
    if (!is_zero_vec(e)) return false;
  return true;
}

ChainClass classify_chain(const LinearRelation& a, const ChainTuple& t,
                          const Eigenvalue& lambda) {
  if (t.head().size() != a.d()) throw DimensionError("chain entries incompatible with relation");
  LinearRelation r = relation_at(a, lambda);
  const std::size_t n = t.top_index();
  ChainClass cls;
  cls.is_chain = true;
  for (std::size_t j = n; j >= 1; --j)
    if (!r.contains_pair(t.x(j), t.x(j - 1))) {
      cls.is_chain = false;
      break;
    }
  if (!cls.is_chain) return cls;
  cls.is_quasi_jordan = r.contains_pair(t.x(0), zero_vec(a.tag(), a.d()));
  if (!cls.is_quasi_jordan) return cls;
  cls.is_singular = !t.is_zero() && parts(r).mul.contains(t.head());
  cls.is_jordan = !parts(power(r, n)).ker.contains(t.head());
  if (cls.is_jordan) cls.jordan_level = n;
  return cls;
}

ChainTuple extract_jordan_chain(const LinearRelation& a, const Vec& head, std::size_t n) {
  const std::size_t d = a.d();
  const FieldTag tag = a.tag();
  if (head.size() != d) throw DimensionError("head length != d");
  if (!parts(power(a, n + 1)).ker.contains(head))
    throw PreconditionError("extract_jordan_chain: head not in N(A^{n+1})");
  if (n == 0) return ChainTuple({head});

  // Unknowns t = (x_{n-1}, ..., x_0) in F^{nd}; constraints: (head|x_{n-1}),
  // (x_j|x_{j-1}) for j = n-1..1, and (x_0|0), all through the annihilator
  // rows of A. Solved as one RREF of the augmented system.
  Matrix na = constraints(a.space());
  const std::size_t q = na.rows();
  const std::size_t cols = n * d;
  Matrix sys(tag, q * (n + 1), cols + 1);
  auto block_col = [&](std::size_t j) {  // column offset of x_j
    return (n - 1 - j) * d;
  };
  // pair (head | x_{n-1})
  for (std::size_t r = 0; r < q; ++r) {
    Scalar rhs = Scalar::zero(tag);
    for (std::size_t c = 0; c < d; ++c) {
      rhs = rhs - na.at(r, c) * head[c];
      sys.at(r, block_col(n - 1) + c) = na.at(r, d + c);
    }
    sys.at(r, cols) = rhs;
  }
  // pairs (x_j | x_{j-1}) for j = n-1..1
  for (std::size_t j = n - 1; j >= 1; --j) {
    std::size_t row0 = q * (n - j);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        sys.at(row0 + r, block_col(j) + c) = na.at(r, c);
        sys.at(row0 + r, block_col(j - 1) + c) = na.at(r, d + c);
      }
  }
  // pair (x_0 | 0)
  {
    std::size_t row0 = q * n;
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < d; ++c)
        sys.at(row0 + r, block_col(0) + c) = na.at(r, c);
  }

  RrefResult rr = rref(sys);
  // consistency: no pivot in the augmented column
  for (std::size_t piv : rr.pivots)
    if (piv == cols) throw PreconditionError("extract_jordan_chain: inconsistent witness system");
  Vec sol = zero_vec(tag, cols);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    sol[rr.pivots[i]] = rr.canonical.at(i, cols);

  std::vector<Vec> head_first;
  head_first.push_back(head);
  for (std::size_t b = 0; b < n; ++b)  // blocks are laid out x_{n-1}, ..., x_0
    head_first.emplace_back(sol.begin() + b * d, sol.begin() + (b + 1) * d);
  return ChainTuple(std::move(head_first));
}

static void require_quasi_jordan(const LinearRelation& a,
                                 const std::vector<ChainTuple>& chains, std::size_t len) {
  for (const auto& t : chains) {
    if (t.length() != len) throw PreconditionError("chains of mixed length");
    ChainClass cls = classify_chain(a, t, Eigenvalue::of(Scalar::zero(a.tag())));
    if (!cls.is_quasi_jordan)
      throw PreconditionError("input tuple is not a quasi-Jordan chain of the relation");
  }
}

ClassSpanDims class_span_dim(const LinearRelation& a, const std::vector<ChainTuple>& chains,
                             std::size_t n) {
  const FieldTag tag = a.tag();
  const std::size_t d = a.d();
  if (chains.empty()) return {0, 0};
  require_quasi_jordan(a, chains, n + 1);

  std::vector<Vec> heads, tails;
  for (const auto& t : chains) {
    heads.push_back(t.x(n));
    tails.push_back(t.x(0));
  }
  Subspace kern = parts(power(a, n)).ker;
  Subspace head_span = Subspace::span(tag, d, heads);
  long left = static_cast<long>(sum(head_span, kern).dim() - kern.dim());

  Subspace tail_span = Subspace::span(tag, d, tails);
  Subspace muln = parts(power(a, n)).mul;
  long right = static_cast<long>(tail_span.dim() - intersect(tail_span, muln).dim());
  return {left, right};
}

namespace {

Vec pair_of(const ChainTuple& t, std::size_t j, std::size_t d) {
  const FieldTag tag = t.head()[0].tag();
  return j == 0 ? concat(t.x(0), zero_vec(tag, d)) : concat(t.x(j), t.x(j - 1));
}

// Functional on F^{2d} vanishing on C with value 1 at pivot; exists since
// A = C + span{pivot} and dim(A/C) = 1.
Vec codim_one_functional(const Subspace& c_space, const Vec& pivot) {
  Matrix ann = constraints(c_space);
  for (std::size_t r = 0; r < ann.rows(); ++r) {
    Scalar val = dot(ann.row(r), pivot);
    if (!val.is_zero()) return scale(val.inverse(), ann.row(r));
  }
  throw PreconditionError("pivot pair unexpectedly annihilated");
}

}  // namespace

ReducedChains reduce_chains(const LinearRelation& a, const LinearRelation& c,
                            const std::vector<ChainTuple>& chains) {
  const std::size_t d = a.d();
  if (!a.space().contains(c.space()))
    throw PreconditionError("reduce_chains: C is not contained in A");
  if (a.dim() != c.dim() + 1)
    throw PreconditionError("reduce_chains: dim(A/C) != 1");
  if (chains.empty()) return {{}, {}};
  const std::size_t len = chains.front().length();
  require_quasi_jordan(a, chains, len);
  const std::size_t n = len - 1;
  const std::size_t m = chains.size();

  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < m; ++k) order[k] = k;

  // J = {(k, j) : pair j of chain k outside C}
  std::size_t h = n + 1, kappa = m;
  for (std::size_t j = 0; j <= n && h == n + 1; ++j)
    for (std::size_t k = 0; k < m; ++k)
      if (!c.space().contains(pair_of(chains[k], j, d))) {
        h = j;
        kappa = k;
        break;
      }
  if (h == n + 1) {
    // J empty: the first m-1 chains already live in C
    ReducedChains out;
    out.order = order;
    out.chains.assign(chains.begin(), chains.end() - 1);
    return out;
  }
  std::swap(order[kappa], order[m - 1]);

  const ChainTuple& pivot = chains[order[m - 1]];
  Vec phi = codim_one_functional(c.space(), pair_of(pivot, h, d));

  ReducedChains out;
  out.order = order;
  for (std::size_t idx = 0; idx + 1 < m; ++idx) {
    const ChainTuple& ch = chains[order[idx]];
    // alpha_j for j = h..n, each cancelling the residue at level j
    std::vector<Scalar> alpha(n + 1, Scalar::zero(a.tag()));
    for (std::size_t j = h; j <= n; ++j) {
      Vec residue = pair_of(ch, j, d);
      for (std::size_t i = h; i < j; ++i)
        residue = sub(residue, scale(alpha[i], pair_of(pivot, j + h - i, d)));
      alpha[j] = dot(phi, residue);
    }
    std::vector<Vec> head_first;
    for (std::size_t jj = n + 1; jj-- > 0;) {
      Vec y = ch.x(jj);
      std::size_t hi = std::min(jj + h, n);
      for (std::size_t i = h; i <= hi; ++i)
        y = sub(y, scale(alpha[i], pivot.x(jj + h - i)));
      head_first.push_back(std::move(y));
    }
    out.chains.emplace_back(std::move(head_first));
  }
  return out;
}

long chainspace_quotient_dim(const LinearRelation& a, const LinearRelation& c,
                             std::size_t m) {
  if (m < 1) throw PreconditionError("chainspace_quotient_dim: m >= 1 required");
  if (!a.space().contains(c.space()))
    throw PreconditionError("chainspace_quotient_dim: containment violated");
  const std::size_t d = a.d();
  const FieldTag tag = a.tag();
  auto chain_space_dim = [&](const LinearRelation& t) {
    Matrix nt = constraints(t.space());
    const std::size_t q = nt.rows();
    Matrix sys(tag, m * q + (m - 1) * d, 2 * d * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t r = 0; r < q; ++r)
        for (std::size_t col = 0; col < 2 * d; ++col)
          sys.at(i * q + r, 2 * d * i + col) = nt.at(r, col);
    // second block of pair i equals first block of pair i+1
    for (std::size_t i = 0; i + 1 < m; ++i)
      for (std::size_t t2 = 0; t2 < d; ++t2) {
        std::size_t row = m * q + i * d + t2;
        sys.at(row, 2 * d * i + d + t2) = Scalar::one(tag);
        sys.at(row, 2 * d * (i + 1) + t2) = -Scalar::one(tag);
      }
    return static_cast<long>(kernel(sys).dim());
  };
  return chain_space_dim(a) - chain_space_dim(c);
}

bool has_singular_chain(const LinearRelation& a) {
  return intersect(stable_kernel(a), stable_mul(a)).dim() > 0;
}

}  // namespace relcalc
