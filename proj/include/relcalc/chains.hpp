#ifndef RELCALC_CHAINS_HPP
#define RELCALC_CHAINS_HPP

#include <vector>

#include "relcalc/relation.hpp"

namespace relcalc {

// Ordered tuple (x_n, ..., x_0) of vectors in F^d, stored head-first.
// x(j) addresses entries the way the chain equations do: x(0) is the tail.
class ChainTuple {
 public:
  explicit ChainTuple(std::vector<Vec> head_first);

  std::size_t length() const { return entries_.size(); }  // n + 1
  std::size_t top_index() const { return entries_.size() - 1; }
  const Vec& x(std::size_t j) const { return entries_[top_index() - j]; }
  const Vec& head() const { return entries_.front(); }
  const Vec& tail() const { return entries_.back(); }
  const std::vector<Vec>& entries() const { return entries_; }
  bool is_zero() const;

  bool operator==(const ChainTuple& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Vec> entries_;
};

struct ChainClass {
  bool is_chain = false;
  bool is_quasi_jordan = false;
  bool is_singular = false;
  bool is_jordan = false;
  std::size_t jordan_level = 0;  // n when is_jordan
};

// Classification against A - lambda (or A^{-1} at infinity). The zero tuple
// is a chain and a quasi-Jordan chain but never singular.
ChainClass classify_chain(const LinearRelation& a, const ChainTuple& t,
                          const Eigenvalue& lambda);

// Witness chain (head, x_{n-1}, ..., x_0) for head in N(A^{n+1}); the
// particular solution with all free variables zero under the canonical
// pivot ordering, so the output is deterministic.
ChainTuple extract_jordan_chain(const LinearRelation& a, const Vec& head, std::size_t n);

struct ClassSpanDims {
  long head_class_dim;     // dim span{[x_{k,n}]} in N(A^{n+1})/N(A^n)
  long tail_quotient_dim;  // dim L / (L cap mul(A^n)), L = span of tails
};
ClassSpanDims class_span_dim(const LinearRelation& a, const std::vector<ChainTuple>& chains,
                             std::size_t n);

struct ReducedChains {
  std::vector<ChainTuple> chains;   // m - 1 quasi-Jordan chains of C
  std::vector<std::size_t> order;   // input indices after reordering; pivot last
};
// The constructive shifting step: C subset of A with dim(A/C) = 1 turns m
// quasi-Jordan chains of A into m-1 quasi-Jordan chains of C, each output
// level j moved only by span{x_{pivot,0..j}}. Pivot choice: minimal level h
// with a pair outside C, then the smallest chain index reaching it.
ReducedChains reduce_chains(const LinearRelation& a, const LinearRelation& c,
                            const std::vector<ChainTuple>& chains);

// dim S_m^A - dim S_m^C where S_m^T is the space of m-pair chains of T,
// built in F^{2dm} with overlap constraints between consecutive pairs.
long chainspace_quotient_dim(const LinearRelation& a, const LinearRelation& c,
                             std::size_t m);

// True iff the stabilized kernel meets the stabilized multivalued part
// nontrivially. Equivalent to the existence of a nonzero singular chain:
// x in N(A^k) cap mul(A^l), x != 0, concatenates the chains 0 -> ... -> x
// and x -> ... -> 0 into a singular chain, and conversely any nonzero entry
// of a singular chain lies in some N(A^j) cap mul(A^j).
bool has_singular_chain(const LinearRelation& a);

}  // namespace relcalc

#endif
