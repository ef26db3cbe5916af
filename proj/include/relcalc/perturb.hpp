#ifndef RELCALC_PERTURB_HPP
#define RELCALC_PERTURB_HPP

#include <string>
#include <vector>

#include "relcalc/relation.hpp"

namespace relcalc {

// max(dim A/(A cap B), dim B/(A cap B))
long perturbation_order(const LinearRelation& a, const LinearRelation& b);

// With C = A cap B and K = N(C) cap R(C^n):
//   s_n(A, B) = dim(K cap mul(A^n)) - dim(K cap mul(C^n)).
// This closed form attains the defining maximum over subspaces L of K with
// L cap mul(C^n) = {0}: any such L meets mul(A^n) inside a complement of
// K cap mul(C^n) in K cap mul(A^n), and such a complement is itself
// admissible. The GF(p) oracle cross-checks this on its whole domain.
long s_n(const LinearRelation& a, const LinearRelation& b, std::size_t n);

// Brute-force maximum over every admissible subspace L; GF(p) with p <= 3
// and dim K <= 4 only.
long s_n_oracle(const LinearRelation& a, const LinearRelation& b, std::size_t n);

// Path C_0 = A, ..., C_p = B with consecutive perturbation order <= 1.
// Complements are taken from the canonical bases in RREF pivot order, padded
// with zeros when one side is smaller; nested inputs give a nested path.
std::vector<LinearRelation> decompose_path(const LinearRelation& a,
                                           const LinearRelation& b);

struct BoundCheck {
  std::string rule;
  long n = 0;
  long lo = 0, hi = 0;  // evaluated two-sided bound
  long value = 0;       // evaluated difference
  bool pass = false;
};

struct PerturbReport {
  long order = 0;
  bool nested = false;  // one relation contains the other
  std::vector<long> s_ab, s_ba, s_bracket;  // index n
  std::vector<long> d_a, d_b;               // jordan degrees
  std::vector<long> ker_a, ker_b;           // dim N(.^n)
  bool singular_chains_a = false, singular_chains_b = false;
  std::vector<BoundCheck> checks;
  bool pass() const;
  std::vector<const BoundCheck*> violations() const;
};

// Evaluates every applicable perturbation bound for n = 0..nmax and records
// a verdict per rule; violations are data, not errors.
PerturbReport check_bounds(const LinearRelation& a, const LinearRelation& b,
                           std::size_t nmax);

// All subspaces of s (canonical bases); feasibility-guarded like the oracle.
std::vector<Subspace> enumerate_subspaces(const Subspace& s);

}  // namespace relcalc

#endif
