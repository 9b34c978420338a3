#include "maclane/ff_factor.hpp"

#include <algorithm>

namespace maclane {

namespace {

struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

FpPoly random_poly(const Fp& F, long deg, SplitMix64& rng) {
    FpPoly r;
    r.c.resize(static_cast<std::size_t>(deg) + 1);
    for (auto& x : r.c) x = rng.next() % F.p();
    r.c.back() = 1 + rng.next() % (F.p() - 1);
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus, p odd): f squarefree, all
// irreducible factors of degree d.
void equal_degree(const Fp& F, const FpPoly& f, long d, SplitMix64& rng,
                  std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(fp_monic(F, f));
        return;
    }
    // exponent (p^d - 1)/2 as bits, msb first, computed in big integers via
    // simple schoolbook on 64-bit limbs is overkill: p^d can overflow for
    // large p and d, so square-and-multiply over the exponent digits of p
    // instead: a^((p^d-1)/2) = (a^(p^(d-1)) * ... * a^(p^0)) ^ ((p-1)/2)
    // using the norm map: N(a) = a^(1+p+...+p^(d-1)), then N(a)^((p-1)/2).
    while (true) {
        FpPoly a = random_poly(F, f.degree() - 1, rng);
        FpPoly g = fp_gcd(F, a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(F, g, d, rng, out);
            FpPoly q, r;
            fp_divmod(F, f, g, q, r);
            equal_degree(F, q, d, rng, out);
            return;
        }
        // norm of a into the degree-d subfield structure
        FpPoly norm = a;
        FpPoly ai = a;
        for (long i = 1; i < d; ++i) {
            ai = fp_pow_mod_u64(F, ai, F.p(), f);
            norm = fp_mod(F, fp_mul(F, norm, ai), f);
        }
        FpPoly b = fp_pow_mod_u64(F, norm, (F.p() - 1) / 2, f);
        FpPoly b1 = fp_sub(F, b, FpPoly::constant(1));
        g = fp_gcd(F, b1, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(F, g, d, rng, out);
            FpPoly q, r;
            fp_divmod(F, f, g, q, r);
            equal_degree(F, q, d, rng, out);
            return;
        }
    }
}

// Distinct-degree factorization of a monic squarefree f.
void distinct_degree(const Fp& F, FpPoly f, SplitMix64& rng, std::vector<FpPoly>& out) {
    FpPoly h = FpPoly::x_power(1);
    long d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f); // remainder is irreducible
            return;
        }
        h = fp_pow_mod_u64(F, h, F.p(), f); // x^(p^d) mod f
        FpPoly g = fp_gcd(F, fp_sub(F, h, FpPoly::x_power(1)), f);
        if (g.degree() > 0) {
            equal_degree(F, g, d, rng, out);
            FpPoly q, r;
            fp_divmod(F, f, g, q, r);
            f = q;
            h = fp_mod(F, h, f);
        }
    }
}

bool factor_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

} // namespace

FpFactorization ff_factor(const Fp& F, const FpPoly& g, std::uint64_t seed) {
    if (g.is_zero()) throw zero_polynomial();
    FpFactorization result;
    result.unit = g.lead();
    FpPoly f = fp_monic(F, g);
    if (f.degree() == 0) return result;

    SplitMix64 rng(seed ^ 0x51ff00d1u);
    // Squarefree decomposition with p-th power descent: multiplicity map.
    std::vector<std::pair<FpPoly, long>> square_free; // (squarefree part, multiplicity)
    struct Item {
        FpPoly f;
        long mult;
    };
    std::vector<Item> stack{{f, 1}};
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.f.degree() == 0) continue;
        FpPoly d = fp_derivative(F, it.f);
        if (d.is_zero()) {
            // f = h(x^p) = h(x)^p over F_p
            FpPoly h;
            h.c.resize(static_cast<std::size_t>(it.f.degree() / F.p()) + 1);
            for (std::size_t i = 0; i < h.c.size(); ++i) h.c[i] = it.f.coeff(i * F.p());
            h.trim();
            stack.push_back({h, it.mult * static_cast<long>(F.p())});
            continue;
        }
        FpPoly c = fp_gcd(F, it.f, d);
        FpPoly w, r;
        fp_divmod(F, it.f, c, w, r); // w: product of factors with mult not divisible by p
        long i = 1;
        while (w.degree() > 0) {
            FpPoly y = fp_gcd(F, w, c);
            FpPoly fac, rr;
            fp_divmod(F, w, y, fac, rr);
            if (fac.degree() > 0) square_free.emplace_back(fac, it.mult * i);
            w = y;
            FpPoly cq;
            fp_divmod(F, c, y, cq, rr);
            c = cq;
            ++i;
        }
        if (c.degree() > 0) stack.push_back({c, it.mult});
    }

    for (auto& [sf, mult] : square_free) {
        std::vector<FpPoly> irr;
        distinct_degree(F, fp_monic(F, sf), rng, irr);
        for (auto& q : irr) result.factors.push_back({fp_monic(F, q), mult});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FpFactor& a, const FpFactor& b) { return factor_less(a.factor, b.factor); });
    // merge equal factors coming from different squarefree parts
    std::vector<FpFactor> merged;
    for (auto& fac : result.factors) {
        if (!merged.empty() && fp_equal(merged.back().factor, fac.factor))
            merged.back().multiplicity += fac.multiplicity;
        else
            merged.push_back(fac);
    }
    result.factors = std::move(merged);
    return result;
}

bool fp_is_irreducible(const Fp& F, const FpPoly& g, std::uint64_t seed) {
    if (g.degree() <= 0) return false;
    auto fac = ff_factor(F, g, seed);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<std::uint64_t> fp_roots(const Fp& F, const FpPoly& g, std::uint64_t seed) {
    std::vector<std::uint64_t> roots;
    for (const auto& fac : ff_factor(F, g, seed).factors) {
        if (fac.factor.degree() == 1)
            roots.push_back(F.sub(0, fac.factor.coeff(0))); // x + c -> root -c
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace maclane
