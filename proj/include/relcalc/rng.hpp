#ifndef RELCALC_RNG_HPP
#define RELCALC_RNG_HPP

#include <cstdint>

#include "relcalc/matrix.hpp"
#include "relcalc/subspace.hpp"

namespace relcalc {

// SplitMix64 (Steele/Lea/Flood): counter-based, 64-bit, the same stream on
// every platform. Constants are the published ones.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % bound;
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

// Random entries: numerators in [-9, 9], denominators in [1, 9] (kept small
// so rational RREF coefficient growth stays manageable at d <= 8).
Scalar random_scalar(SplitMix64& rng, const FieldTag& tag);
// Sparse variant: zero with probability 1/2, otherwise a small entry.
Scalar random_sparse_scalar(SplitMix64& rng, const FieldTag& tag);
Vec random_vector(SplitMix64& rng, const FieldTag& tag, std::size_t n, bool sparse = true);
Matrix random_matrix(SplitMix64& rng, const FieldTag& tag, std::size_t rows,
                     std::size_t cols, bool sparse = false);
Subspace random_subspace(SplitMix64& rng, const FieldTag& tag, std::size_t ambient,
                         std::size_t target_dim);
// Random invertible matrix: product of unit triangular factors.
Matrix random_invertible(SplitMix64& rng, const FieldTag& tag, std::size_t n);

}  // namespace relcalc

#endif
