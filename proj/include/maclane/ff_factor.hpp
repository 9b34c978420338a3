#ifndef MACLANE_FF_FACTOR_HPP
#define MACLANE_FF_FACTOR_HPP

/* Complete factorization over the prime field by squarefree decomposition,
 * distinct-degree splitting and Cantor-Zassenhaus, deterministic for a fixed
 * PRNG seed. */

#include <cstdint>
#include <utility>
#include <vector>

#include "maclane/fp.hpp"

namespace maclane {

struct FpFactor {
    FpPoly factor; // monic irreducible
    long multiplicity = 0;
};

/// Factors ordered deterministically (by degree, then coefficient values).
/// The unit is returned separately: g = unit * prod factor^multiplicity.
struct FpFactorization {
    std::uint64_t unit = 1;
    std::vector<FpFactor> factors;
};

FpFactorization ff_factor(const Fp& F, const FpPoly& g, std::uint64_t seed);

bool fp_is_irreducible(const Fp& F, const FpPoly& g, std::uint64_t seed);

/// Distinct roots in F_p (from the factorization's linear factors).
std::vector<std::uint64_t> fp_roots(const Fp& F, const FpPoly& g, std::uint64_t seed);

} // namespace maclane

#endif
