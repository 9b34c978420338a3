#include "maclane/fp.hpp"

#include <array>

namespace maclane {

static std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::string FpPoly::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i > 0) {
            if (c[i] != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

FpPoly fp_add(const Fp& F, const FpPoly& a, const FpPoly& b) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

FpPoly fp_sub(const Fp& F, const FpPoly& a, const FpPoly& b) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::zero();
    FpPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

FpPoly fp_scale(const Fp& F, const FpPoly& a, std::uint64_t s) {
    FpPoly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    r.trim();
    return r;
}

void fp_divmod(const Fp& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.is_zero()) throw engine_error("division by zero polynomial over F_p");
    q = FpPoly::zero();
    r = a;
    const long db = b.degree();
    const std::uint64_t inv_lead = F.inv(b.lead());
    if (r.degree() >= db) q.c.assign(static_cast<std::size_t>(r.degree() - db) + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        const long k = r.degree() - db;
        const std::uint64_t f = F.mul(r.lead(), inv_lead);
        q.c[static_cast<std::size_t>(k)] = f;
        for (long i = 0; i <= db; ++i) {
            auto idx = static_cast<std::size_t>(k + i);
            r.c[idx] = F.sub(r.c[idx], F.mul(f, b.coeff(static_cast<std::size_t>(i))));
        }
        r.trim();
    }
    q.trim();
}

FpPoly fp_mod(const Fp& F, const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divmod(F, a, b, q, r);
    return r;
}

FpPoly fp_monic(const Fp& F, const FpPoly& a) {
    if (a.is_zero()) return a;
    return fp_scale(F, a, F.inv(a.lead()));
}

FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

FpPoly fp_derivative(const Fp& F, const FpPoly& a) {
    FpPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = F.mul(a.c[i], i % F.p());
    r.trim();
    return r;
}

FpPoly fp_pow_mod_u64(const Fp& F, FpPoly base, std::uint64_t e, const FpPoly& mod) {
    FpPoly r = FpPoly::constant(1);
    base = fp_mod(F, base, mod);
    while (e) {
        if (e & 1) r = fp_mod(F, fp_mul(F, r, base), mod);
        base = fp_mod(F, fp_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

FpPoly fp_pow_mod(const Fp& F, FpPoly base, const std::vector<std::uint64_t>& e_bits_msb,
                  const FpPoly& mod) {
    FpPoly r = FpPoly::constant(1);
    base = fp_mod(F, base, mod);
    for (std::uint64_t bit : e_bits_msb) {
        r = fp_mod(F, fp_mul(F, r, r), mod);
        if (bit) r = fp_mod(F, fp_mul(F, r, base), mod);
    }
    return r;
}

bool fp_equal(const FpPoly& a, const FpPoly& b) { return a.c == b.c; }

std::uint64_t fp_eval(const Fp& F, const FpPoly& a, std::uint64_t x) {
    std::uint64_t r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

} // namespace maclane
