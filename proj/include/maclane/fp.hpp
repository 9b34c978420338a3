#ifndef MACLANE_FP_HPP
#define MACLANE_FP_HPP

/* Arithmetic in the prime residue field F_p and dense polynomials over it.
 * p is an odd prime fitting in 63 bits; products go through __int128. */

#include <cstdint>
#include <string>
#include <vector>

#include "maclane/errors.hpp"

namespace maclane {

bool is_prime_u64(std::uint64_t n);

class Fp {
  public:
    explicit Fp(std::uint64_t p) : p_(p) {}
    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw engine_error("division by zero in residue field");
        return pow(a % p_, p_ - 2);
    }

  private:
    std::uint64_t p_;
};

/// Dense polynomial over F_p, lowest coefficient first, no trailing zeros.
struct FpPoly {
    std::vector<std::uint64_t> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    std::uint64_t lead() const { return c.back(); }
    std::uint64_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

    static FpPoly zero() { return {}; }
    static FpPoly constant(std::uint64_t a) {
        FpPoly f;
        if (a != 0) f.c = {a};
        return f;
    }
    static FpPoly x_power(std::size_t k, std::uint64_t a = 1) {
        FpPoly f;
        if (a != 0) {
            f.c.assign(k + 1, 0);
            f.c[k] = a;
        }
        return f;
    }

    std::string str(const std::string& var = "z") const;
};

FpPoly fp_add(const Fp& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const Fp& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const Fp& F, const FpPoly& a, std::uint64_t s);
// Euclidean division; b must be nonzero.
void fp_divmod(const Fp& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const Fp& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b); // monic gcd
FpPoly fp_derivative(const Fp& F, const FpPoly& a);
FpPoly fp_monic(const Fp& F, const FpPoly& a);
FpPoly fp_pow_mod(const Fp& F, FpPoly base, const std::vector<std::uint64_t>& e_bits_msb,
                  const FpPoly& mod);
FpPoly fp_pow_mod_u64(const Fp& F, FpPoly base, std::uint64_t e, const FpPoly& mod);
bool fp_equal(const FpPoly& a, const FpPoly& b);
std::uint64_t fp_eval(const Fp& F, const FpPoly& a, std::uint64_t x);

} // namespace maclane

#endif
