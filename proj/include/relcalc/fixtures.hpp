#ifndef RELCALC_FIXTURES_HPP
#define RELCALC_FIXTURES_HPP

#include <utility>

#include "relcalc/pencil.hpp"
#include "relcalc/relation.hpp"

namespace relcalc {
namespace fixtures {

// span{(0|e1), (e1|0), (e2|e1)} in Q^4: kernel is all of Q^2, multivalued
// part span{e1}; the smallest relation with a singular chain.
LinearRelation ex31();
LinearRelation identity2();
// 2x2 nilpotent block: N2 e2 = e1, N2 e1 = 0.
Matrix n2_matrix();
LinearRelation n2_relation();
Pencil n2_pencil();  // sI - N2
// The sharpness pair: one-dimensional perturbations with
// D_n(A) - D_n(B) = n + 1 at level n; ambient Q^{(n+1)^2}, n >= 2.
std::pair<LinearRelation, LinearRelation> sharp(std::size_t n);
Pencil sing_pencil();  // E = F = diag(1, 0)
Pencil wong_pencil();  // E = N2, F = I

}  // namespace fixtures
}  // namespace relcalc

#endif
