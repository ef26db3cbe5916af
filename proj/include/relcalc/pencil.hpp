#ifndef RELCALC_PENCIL_HPP
#define RELCALC_PENCIL_HPP

#include <string>
#include <vector>

#include "relcalc/perturb.hpp"
#include "relcalc/poly.hpp"
#include "relcalc/relation.hpp"

namespace relcalc {

// Matrix pencil A(s) = sE - F.
struct Pencil {
  Matrix E, F;
  Pencil(Matrix e, Matrix f);
  std::size_t d() const { return E.rows(); }
  const FieldTag& tag() const { return E.tag(); }
};

// Rank-one pencil P(s) = w (s u* + v*); * is conjugate transpose over Qi,
// plain transpose otherwise.
struct RankOnePencil {
  Vec u, v, w;
  RankOnePencil(Vec u, Vec v, Vec w);  // validates w != 0, (u, v) != (0, 0)
};

struct PencilProfile {
  Poly det_poly;
  bool regular = false;  // det(sE - F) not identically zero
  std::size_t pencil_rank = 0;
};

// Determinant and rank by fraction-free (Bareiss) elimination over F[s]
// with full pivoting; uniform over GF(p) where point evaluation is scarce.
PencilProfile profile(const Pencil& p);

// E^{-1}F = {(x, y) : Fx = Ey} = kernel of the block row [F | -E].
LinearRelation to_relation(const Pencil& p);

// Dual pencil sF - E; swaps the roles of zero and infinity.
Pencil dual(const Pencil& p);

// dim L_lambda^{n+1} / L_lambda^n for n = 0..nmax, through the relation
// bridge: jordan degrees of E^{-1}F - lambda (dual relation at infinity).
std::vector<long> jordan_dims_at(const Pencil& p, const Eigenvalue& lambda,
                                 std::size_t nmax);

// (E + w u*, F + w v*)
Pencil apply_perturbation(const Pencil& p, const RankOnePencil& q);

// N[F; -E] subset of N[v*; -u*]; when true, E^{-1}F is contained in the
// perturbed relation.
bool satisfies_inclusion(const Pencil& p, const RankOnePencil& q);

// Wong sequence of the second kind: W_0 = {0}, W_{i+1} = {x : Ex in F W_i}.
std::vector<Subspace> wong(const Pencil& p, std::size_t nmax);

struct SpectrumScan {
  std::vector<Eigenvalue> finite;  // exact roots of det_poly, deduplicated
  bool fully_resolved = true;      // false when a factor of degree >= 1 remains
};
// Exact eigenvalue candidates: rational root search over Q, Gaussian-integer
// divisor (norm) search over Qi, exhaustive field scan over GF(p).
// Singular pencils scan nothing and report fully_resolved.
SpectrumScan spectrum_scan(const Pencil& p);
// Roots of both det polynomials plus infinity; what the harness tests.
std::vector<Eigenvalue> auto_lambdas(const Pencil& p, const Pencil& perturbed);

struct PencilLambdaChecks {
  Eigenvalue lambda;
  std::vector<long> d_base, d_pert;     // quotient dims per n
  std::vector<long> s_base_pert, s_pert_base;  // s_n of the shifted relation pair
  std::vector<BoundCheck> checks;
};

struct BoundReport {
  bool regular_base = false, regular_pert = false;
  std::string case_name;
  bool inclusion = false;
  bool inclusion_relation_verified = false;  // E^{-1}F subset of perturbed relation
  long relation_order = 0;                   // always <= 1
  long dual_relation_order = 0;
  bool untested_spectrum = false;
  std::vector<PencilLambdaChecks> lambdas;
  std::vector<long> wong_q_base, wong_q_pert;  // dim W_{n+1}/W_n
  std::vector<BoundCheck> wong_checks;
  bool pass() const;
};

// Evaluates the case-appropriate two-sided bounds (and the refined ones
// under the inclusion hypothesis) at every given lambda for n = 1..nmax,
// plus the Wong-quotient bounds. Violations are data, not errors.
BoundReport pencil_bound_report(const Pencil& p, const RankOnePencil& q,
                                const std::vector<Eigenvalue>& lambdas,
                                std::size_t nmax);

}  // namespace relcalc

#endif
