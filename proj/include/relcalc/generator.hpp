#ifndef RELCALC_GENERATOR_HPP
#define RELCALC_GENERATOR_HPP

#include <cstdint>
#include <utility>

#include "relcalc/pencil.hpp"
#include "relcalc/relation.hpp"

namespace relcalc {

// Seeded relation pair with perturbation_order(A, B) <= p: a shared random
// core C plus p extra generators on each side. The stream is seed ^ trial,
// one independent SplitMix64 stream per trial.
std::pair<LinearRelation, LinearRelation> gen_pair(const FieldTag& tag, std::size_t d,
                                                   std::size_t p, std::uint64_t seed,
                                                   std::uint64_t trial);

// Seeded pencil + rank-one perturbation; draws regular and targeted-singular
// pencils about evenly, and a quarter of the perturbations satisfy the
// kernel inclusion hypothesis by construction.
std::pair<Pencil, RankOnePencil> gen_pencil(const FieldTag& tag, std::size_t d,
                                            std::uint64_t seed, std::uint64_t trial);

}  // namespace relcalc

#endif
