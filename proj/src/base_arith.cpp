#include "maclane/base_arith.hpp"

#include <algorithm>
#include <cassert>

namespace maclane {

Value val_p(const Int& n, std::uint64_t p) {
    if (n == 0) return Value::infinity();
    Int m = n;
    const Int P(static_cast<unsigned long>(p));
    unsigned long k = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
    return Value(Rat(static_cast<long>(k)));
}

Value val_p(const Rat& q, std::uint64_t p) {
    if (q == 0) return Value::infinity();
    Value vn = val_p(rat_num(q), p);
    Value vd = val_p(rat_den(q), p);
    return Value(vn.rat() - vd.rat());
}

Value gauss_val(const Poly& f, std::uint64_t p) {
    if (f.is_zero()) return Value::infinity();
    Value m = Value::infinity();
    for (const auto& a : f.coeffs()) {
        if (a == 0) continue;
        m = min_value(m, val_p(a, p));
    }
    return m;
}

/* ---- resultants ------------------------------------------------------- */

namespace {

struct ZPoly {
    std::vector<Int> c;
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    bool is_zero() const { return c.empty(); }
};

ZPoly to_zpoly(const Poly& f, Int& den) {
    den = f.denominator_lcm();
    ZPoly r;
    r.c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        Rat s = a * Rat(den);
        assert(is_integer(s));
        r.c.push_back(rat_num(s));
    }
    r.trim();
    return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B, computed in Z[x].
ZPoly pseudo_rem(const ZPoly& A, const ZPoly& B) {
    ZPoly R = A;
    const long db = B.degree();
    const Int& lb = B.lead();
    long e = R.degree() - db + 1;
    while (!R.is_zero() && R.degree() >= db) {
        const long k = R.degree() - db;
        Int top = R.lead();
        for (auto& x : R.c) x *= lb;
        for (long i = 0; i <= db; ++i)
            R.c[static_cast<std::size_t>(k + i)] -= top * B.c[static_cast<std::size_t>(i)];
        R.trim();
        --e;
    }
    // Keep the multiplier exactly lc(B)^(delta+1) regardless of degree drops.
    if (e > 0) {
        Int f = pow_int(lb, static_cast<unsigned long>(e));
        for (auto& x : R.c) x *= f;
    }
    return R;
}

Int zcontent(const ZPoly& f) {
    Int g(0);
    for (const auto& x : f.c) g = gcd_int(g, x);
    if (g == 0) g = 1;
    if (f.lead() < 0) g = -g;
    return g;
}

// Subresultant PRS resultant for nonzero A, B in Z[x].
Int zresultant(ZPoly A, ZPoly B) {
    if (A.degree() == 0 && B.degree() == 0) return Int(1);
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2) && (B.degree() % 2)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        Int r = pow_int(B.lead(), static_cast<unsigned long>(A.degree()));
        return sign > 0 ? r : Int(-r);
    }
    // Signed contents (sign of the lead), so the primitive parts have
    // positive leading coefficients: Res(aP, bQ) = a^degQ b^degP Res(P, Q).
    Int a = zcontent(A), b = zcontent(B);
    for (auto& x : A.c) x /= a;
    for (auto& x : B.c) x /= b;
    Int t = pow_int(a, static_cast<unsigned long>(B.degree()));
    t *= pow_int(b, static_cast<unsigned long>(A.degree()));
    Int g(1), h(1);
    while (true) {
        const long delta = A.degree() - B.degree();
        if ((A.degree() % 2) && (B.degree() % 2)) sign = -sign;
        ZPoly R = pseudo_rem(A, B);
        A = std::move(B);
        Int divisor = g * pow_int(h, static_cast<unsigned long>(delta));
        for (auto& x : R.c) {
            assert(mpz_divisible_p(x.get_mpz_t(), divisor.get_mpz_t()));
            x /= divisor;
        }
        B = std::move(R);
        g = A.lead();
        if (delta >= 1) {
            // h = g^delta / h^(delta-1), exact
            Int num = pow_int(g, static_cast<unsigned long>(delta));
            Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
            assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
            h = num / den;
        }
        if (B.is_zero()) return Int(0);
        if (B.degree() == 0) break;
    }
    // h = lc(B)^deg(A) / h^(deg A - 1), exact
    Int num = pow_int(B.lead(), static_cast<unsigned long>(A.degree()));
    Int den = pow_int(h, static_cast<unsigned long>(A.degree() - 1));
    assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
    Int r = t * (num / den);
    return sign > 0 ? r : Int(-r);
}

} // namespace

Rat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw zero_polynomial();
    if (f.degree() == 0 && g.degree() == 0) return Rat(1);
    Int df, dg;
    ZPoly A = to_zpoly(f, df);
    ZPoly B = to_zpoly(g, dg);
    Rat r(zresultant(A, B));
    // Res(A/df, B/dg) = Res(A,B) / (df^deg g * dg^deg f)
    Rat scale(pow_int(df, static_cast<unsigned long>(g.degree())) *
              pow_int(dg, static_cast<unsigned long>(f.degree())));
    return r / scale;
}

Rat discriminant(const Poly& f) {
    const long d = f.degree();
    if (d <= 0) throw zero_polynomial();
    if (d == 1) return Rat(1);
    Rat res = resultant(f, f.derivative());
    Rat disc = res / f.lead();
    const long k = (d * (d - 1) / 2) % 2;
    return k ? Rat(-disc) : disc;
}

Rat discriminant_prime(const Poly& f) {
    const long d = f.degree();
    if (d <= 0) throw zero_polynomial();
    Rat disc = discriminant(f);
    if (d % 2 == 0) return disc;
    // Odd declared degree is padded to d+1; specializing the universal
    // degree-(d+1) discriminant at a vanishing top coefficient gives
    // lead^2 * disc_d.
    return f.lead() * f.lead() * disc;
}

Value disc_val(const Poly& f, std::uint64_t p) {
    Rat d = discriminant(f);
    if (d == 0) throw inseparable_input();
    return val_p(d, p);
}

Value disc_prime_val(const Poly& f, std::uint64_t p) {
    Rat d = discriminant_prime(f);
    if (d == 0) throw inseparable_input();
    return val_p(d, p);
}

std::vector<NewtonSegment> newton_polygon(const Poly& f, std::uint64_t p) {
    if (f.is_zero()) throw zero_polynomial();
    std::vector<NewtonSegment> out;
    long lo = 0;
    while (f.coeff(static_cast<std::size_t>(lo)) == 0) ++lo;
    if (lo > 0) out.push_back({Value::infinity(), lo});
    // Lower convex hull of (i, val a_i) for i in [lo, deg], left to right.
    std::vector<std::pair<long, Rat>> pts;
    for (long i = lo; i <= f.degree(); ++i) {
        const Rat a = f.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        pts.emplace_back(i, val_p(a, p).rat());
    }
    std::vector<std::pair<long, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& q1 = hull[hull.size() - 2];
            const auto& q2 = hull[hull.size() - 1];
            // keep if q2 strictly below segment q1->pt
            Rat lhs = (q2.second - q1.second) * (pt.first - q1.first);
            Rat rhs = (pt.second - q1.second) * (q2.first - q1.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    for (std::size_t k = 1; k < hull.size(); ++k) {
        Rat slope = (hull[k].second - hull[k - 1].second) / (hull[k].first - hull[k - 1].first);
        out.push_back({Value(-slope), hull[k].first - hull[k - 1].first});
    }
    return out;
}

bool all_roots_positive(const Poly& f, std::uint64_t p) {
    for (const auto& seg : newton_polygon(f, p)) {
        if (!seg.root_valuation.is_infinity() && !(seg.root_valuation.rat() > 0)) return false;
    }
    return true;
}

FpPoly reduce_mod_p(const Poly& f, const Fp& F) {
    const std::uint64_t p = F.p();
    FpPoly r;
    r.c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        Int n = rat_num(a), d = rat_den(a);
        const Int P(static_cast<unsigned long>(p));
        if (mpz_divisible_p(d.get_mpz_t(), P.get_mpz_t()))
            throw engine_error("coefficient is not p-integral");
        Int nm = n % P, dm = d % P;
        std::uint64_t nu = mpz_get_ui(Int(((nm % P) + P) % P).get_mpz_t());
        std::uint64_t du = mpz_get_ui(Int(((dm % P) + P) % P).get_mpz_t());
        r.c.push_back(F.mul(nu, F.inv(du)));
    }
    r.trim();
    return r;
}

bool is_eisenstein(const Poly& f, std::uint64_t p) {
    const long d = f.degree();
    if (d < 1 || !f.is_monic()) return false;
    for (long i = 0; i < d; ++i) {
        Value v = val_p(f.coeff(static_cast<std::size_t>(i)), p);
        if (v < Value(1)) return false;
    }
    return val_p(f.coeff(0), p) == Value(1);
}

/* ---- bivariate resultant by evaluation / interpolation ----------------- */

Poly resultant_y(const Poly& f_of_y, const std::vector<Poly>& g_coeffs_in_y) {
    if (f_of_y.is_zero() || g_coeffs_in_y.empty()) throw zero_polynomial();
    long degy_g = static_cast<long>(g_coeffs_in_y.size()) - 1;
    while (degy_g > 0 && g_coeffs_in_y[static_cast<std::size_t>(degy_g)].is_zero()) --degy_g;
    // The top y-coefficient must not depend on x, so specialization commutes
    // with taking the resultant.
    if (g_coeffs_in_y[static_cast<std::size_t>(degy_g)].degree() > 0)
        throw engine_error("resultant_y requires a constant top y-coefficient");
    long max_degx = 0;
    for (const auto& gk : g_coeffs_in_y) max_degx = std::max(max_degx, gk.degree());
    const long bound = f_of_y.degree() * max_degx + 1;
    std::vector<Rat> xs, ys;
    for (long i = 0; i <= bound; ++i) {
        Rat x0(i);
        std::vector<Rat> b(static_cast<std::size_t>(degy_g) + 1);
        for (long k = 0; k <= degy_g; ++k)
            b[static_cast<std::size_t>(k)] = g_coeffs_in_y[static_cast<std::size_t>(k)].eval(x0);
        Poly by(std::move(b));
        xs.push_back(x0);
        ys.push_back(by.is_zero() ? Rat(0) : resultant(f_of_y, by));
    }
    // Lagrange interpolation (Newton form).
    std::vector<Rat> coef = ys; // divided differences
    for (std::size_t j = 1; j < coef.size(); ++j)
        for (std::size_t i = coef.size(); i-- > j;)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    Poly r = Poly::constant(coef.back());
    for (std::size_t i = coef.size() - 1; i-- > 0;) {
        Poly lin({-xs[i], Rat(1)});
        r = r * lin + Poly::constant(coef[i]);
    }
    return r;
}

Poly compose_sum(const Poly& f, const Poly& g) {
    // Res_y(f(y), g(x - y)): coefficients of g(x - y) as a polynomial in y.
    const long dg = g.degree();
    if (dg < 1 || f.degree() < 1) throw zero_polynomial();
    std::vector<Poly> gy(static_cast<std::size_t>(dg) + 1);
    // g(x - y) = sum_j g_j (x - y)^j; expand with binomials.
    for (long j = 0; j <= dg; ++j) {
        const Rat gj = g.coeff(static_cast<std::size_t>(j));
        if (gj == 0) continue;
        // (x - y)^j = sum_k C(j,k) x^(j-k) (-y)^k
        Int binom(1);
        for (long k = 0; k <= j; ++k) {
            Rat c = gj * Rat(binom);
            if (k % 2) c = -c;
            gy[static_cast<std::size_t>(k)] =
                gy[static_cast<std::size_t>(k)] + Poly::monomial(c, static_cast<std::size_t>(j - k));
            binom = binom * (j - k) / (k + 1);
        }
    }
    return resultant_y(f, gy);
}

} // namespace maclane
