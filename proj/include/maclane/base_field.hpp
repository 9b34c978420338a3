#ifndef MACLANE_BASE_FIELD_HPP
#define MACLANE_BASE_FIELD_HPP

/* The configured base: rationals with the p-adic valuation, p odd, plus the
 * knobs the probabilistic and modular kernels need.  The residue field F_p
 * stands in for an algebraically closed field; operations that notice the
 * difference raise residue_field_obstruction. */

#include <cstdint>

#include "maclane/errors.hpp"
#include "maclane/fp.hpp"

namespace maclane {

struct BaseField {
    std::uint64_t p = 0;
    std::uint64_t seed = 0;
    // Cap on the exponent N of the modulus p^N used by Hensel clustering.
    unsigned max_precision = 4096;

    BaseField() = default;
    BaseField(std::uint64_t p_, std::uint64_t seed_ = 0, unsigned max_precision_ = 4096)
        : p(p_), seed(seed_), max_precision(max_precision_) {
        validate();
    }

    void validate() const {
        if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
            throw engine_error("base field requires an odd prime p >= 3");
        if (max_precision < 16)
            throw engine_error("modular precision cap must be at least 16");
    }

    Fp fp() const { return Fp(p); }

    friend bool operator==(const BaseField& a, const BaseField& b) { return a.p == b.p; }
};

} // namespace maclane

#endif
