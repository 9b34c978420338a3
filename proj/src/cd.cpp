#include "maclane/cd.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "maclane/base_arith.hpp"
#include "maclane/errors.hpp"
#include "maclane/ff_factor.hpp"

namespace maclane {

/* ---- normalization -------------------------------------------------------- */

NormalizedInput normalize_input(const Poly& f, const BaseField& base) {
    if (f.is_zero()) throw zero_polynomial();
    if (!f.is_p_integral(base.p)) throw engine_error("input must be p-integral");
    NormalizedInput out;
    const Rat lead = f.lead();
    Value lv = val_p(lead, base.p);
    out.lead_val = rat_num(lv.rat());
    out.b = static_cast<int>(mpz_odd_p(out.lead_val.get_mpz_t()) ? 1 : 0);
    out.unit_treated_as_square = true; // the unit part is absorbed as a square
    out.monic = f.scaled(1 / lead);
    if (!out.monic.is_p_integral(base.p))
        throw engine_error("normalization left non-integral coefficients; "
                           "the input needs a coordinate change (roots at infinity)");
    // separability of the monic part
    if (out.monic.degree() >= 1 && poly_gcd(out.monic, out.monic.derivative()).degree() > 0)
        throw inseparable_input();
    return out;
}

/* ---- Hensel clustering ----------------------------------------------------- */

namespace {

using ZV = std::vector<Int>; // poly mod M, coefficients canonical in [0, M)

void zv_trim(ZV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZV zv_from_poly(const Poly& f, const Int& M) {
    ZV r;
    for (const auto& q : f.coeffs()) {
        if (rat_den(q) != 1) throw engine_error("Hensel lifting needs integral input");
        Int c = rat_num(q) % M;
        if (c < 0) c += M;
        r.push_back(c);
    }
    zv_trim(r);
    return r;
}

ZV zv_mul(const ZV& a, const ZV& b, const Int& M) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % M;
    zv_trim(r);
    return r;
}

ZV zv_sub(const ZV& a, const ZV& b, const Int& M) {
    ZV r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int x = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        x %= M;
        if (x < 0) x += M;
        r[i] = x;
    }
    zv_trim(r);
    return r;
}

ZV zv_add(const ZV& a, const ZV& b, const Int& M) {
    ZV r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = ((i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0))) % M;
    zv_trim(r);
    return r;
}

// division by a monic divisor, mod M
void zv_divmod(const ZV& a, const ZV& b, const Int& M, ZV& q, ZV& r) {
    if (b.empty() || b.back() != 1) throw engine_error("Hensel division needs a monic divisor");
    r = a;
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Int(0));
    while (r.size() >= b.size()) {
        Int top = r.back();
        std::size_t k = r.size() - b.size();
        q[k] = top;
        for (std::size_t i = 0; i < b.size(); ++i) {
            Int x = (r[k + i] - top * b[i]) % M;
            if (x < 0) x += M;
            r[k + i] = x;
        }
        std::size_t before = r.size();
        zv_trim(r);
        if (r.size() == before)
            throw engine_error("modular division made no progress (bug trap)");
    }
    zv_trim(q);
}

ZV zv_from_fp(const FpPoly& f) {
    ZV r;
    for (auto c : f.c) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

// One quadratic Hensel step: from f = g h (mod M), s g + t h = 1 (mod M)
// with g, h monic, to the same relations mod M^2.
void hensel_step(const ZV& f, ZV& g, ZV& h, ZV& s, ZV& t, const Int& M) {
    const Int M2 = M * M;
    ZV e = zv_sub(f, zv_mul(g, h, M2), M2);
    ZV q, r;
    zv_divmod(zv_mul(s, e, M2), h, M2, q, r);
    ZV gstar = zv_add(zv_add(g, zv_mul(t, e, M2), M2), zv_mul(q, g, M2), M2);
    ZV hstar = zv_add(h, r, M2);
    ZV b = zv_sub(zv_add(zv_mul(s, gstar, M2), zv_mul(t, hstar, M2), M2), ZV{Int(1)}, M2);
    ZV c, d;
    zv_divmod(zv_mul(s, b, M2), hstar, M2, c, d);
    ZV sstar = zv_sub(s, d, M2);
    ZV tstar = zv_sub(zv_sub(t, zv_mul(t, b, M2), M2), zv_mul(c, gstar, M2), M2);
    g = std::move(gstar);
    h = std::move(hstar);
    s = std::move(sstar);
    t = std::move(tstar);
}

// Extended Euclid over F_p for the initial Bezout pair.
void fp_bezout(const Fp& F, const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::constant(1), s1 = FpPoly::zero();
    FpPoly t0 = FpPoly::zero(), t1 = FpPoly::constant(1);
    while (!r1.is_zero()) {
        FpPoly q, r;
        fp_divmod(F, r0, r1, q, r);
        FpPoly s2 = fp_sub(F, s0, fp_mul(F, q, s1));
        FpPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw engine_error("residual factors are not coprime");
    std::uint64_t inv = F.inv(r0.coeff(0));
    s = fp_scale(F, s0, inv);
    t = fp_scale(F, t0, inv);
}

Poly poly_from_balanced(const ZV& a, const Int& M) {
    std::vector<Rat> c;
    Int half = M / 2;
    for (const auto& x : a) {
        Int v = x;
        if (v > half) v -= M;
        c.emplace_back(Rat(v));
    }
    return Poly(std::move(c));
}

// Lift the full coprime residual factorization of the monic f to Z/M.
std::vector<ZV> hensel_tree(const Poly& f, const std::vector<FpPoly>& residual,
                            const BaseField& base, const Int& M, unsigned target_exp) {
    const Fp F = base.fp();
    const Int P(static_cast<unsigned long>(base.p));
    std::vector<ZV> out;
    ZV fcur = zv_from_poly(f, M);
    std::vector<FpPoly> rest(residual.begin(), residual.end());
    Poly frest = f;
    while (rest.size() > 1) {
        FpPoly g0 = rest.front();
        FpPoly h0 = FpPoly::constant(1);
        for (std::size_t i = 1; i < rest.size(); ++i) h0 = fp_mul(F, h0, rest[i]);
        FpPoly s0, t0;
        fp_bezout(F, g0, h0, s0, t0);
        ZV g = zv_from_fp(g0), h = zv_from_fp(h0), s = zv_from_fp(s0), t = zv_from_fp(t0);
        Int m = P;
        unsigned exp = 1;
        while (exp < target_exp) {
            hensel_step(zv_from_poly(frest, m * m), g, h, s, t, m);
            m = m * m;
            exp *= 2;
        }
        // reduce down to M
        for (auto& c : g) {
            c %= M;
            if (c < 0) c += M;
        }
        for (auto& c : h) {
            c %= M;
            if (c < 0) c += M;
        }
        out.push_back(g);
        // recurse on h: we need an integral representative of h to continue;
        // use the balanced lift (verified globally by the caller)
        frest = poly_from_balanced(h, M);
        rest.erase(rest.begin());
        if (rest.size() == 1) out.push_back(zv_from_poly(frest, M));
    }
    if (residual.size() == 1) out.push_back(zv_from_poly(f, M));
    return out;
}

} // namespace

std::vector<Cluster> cluster_shift(const Poly& monic, const BaseField& base) {
    if (!monic.is_monic()) throw engine_error("cluster_shift expects a monic polynomial");
    const Fp F = base.fp();
    FpPoly red = reduce_mod_p(monic, F);
    auto fac = ff_factor(F, red, base.seed);
    for (const auto& q : fac.factors)
        if (q.factor.degree() >= 2)
            throw residue_field_obstruction("residual factor " + q.factor.str("x") +
                                            " of degree >= 2: the prime residue field cannot "
                                            "emulate the closure for this input");
    if (fac.factors.size() == 1) {
        Cluster c;
        c.lifted = monic;
        std::uint64_t root = F.sub(0, fac.factors[0].factor.coeff(0));
        c.shift = Int(static_cast<unsigned long>(root));
        c.shifted = monic.shifted(Rat(c.shift));
        return {c};
    }
    // group residual linear factors with multiplicity: (x - c)^m per cluster
    std::vector<FpPoly> residual;
    std::vector<std::uint64_t> roots;
    for (const auto& q : fac.factors) {
        FpPoly g = FpPoly::constant(1);
        for (long i = 0; i < q.multiplicity; ++i) g = fp_mul(F, g, q.factor);
        residual.push_back(g);
        roots.push_back(F.sub(0, q.factor.coeff(0)));
    }
    // The true cluster factors are recovered exactly: lift with doubling
    // precision and accept only when the balanced lifts multiply back to
    // the input over Z.
    const Int P(static_cast<unsigned long>(base.p));
    for (unsigned exp = 16; exp <= base.max_precision; exp *= 2) {
        Int M = pow_int(P, exp);
        auto lifts = hensel_tree(monic, residual, base, M, exp);
        std::vector<Poly> cands;
        Poly prod = Poly::constant(Rat(1));
        for (const auto& l : lifts) {
            Poly c = poly_from_balanced(l, M);
            prod = prod * c;
            cands.push_back(std::move(c));
        }
        if (prod == monic) {
            std::vector<Cluster> out;
            for (std::size_t i = 0; i < cands.size(); ++i) {
                Cluster c;
                c.lifted = cands[i];
                c.shift = Int(static_cast<unsigned long>(roots[i]));
                c.shifted = cands[i].shifted(Rat(c.shift));
                out.push_back(std::move(c));
            }
            return out;
        }
    }
    throw precision_exhausted(
        "cluster factors did not stabilize below the precision cap; they are likely "
        "p-adically irrational -- supply the factorization explicitly");
}

/* ---- field discriminants --------------------------------------------------- */

Int field_discriminant(const FactorSpec& f, const BaseField& base) {
    const long d = f.poly.degree();
    if (d < 1 || !f.poly.is_monic())
        throw strategy_inapplicable("field discriminants need a monic factor of positive degree");
    auto eisenstein_delta = [&](const Poly& g) {
        return rat_num(disc_val(g, base.p).rat());
    };
    auto radical_delta = [&]() -> std::optional<Int> {
        // f = x^d - c with val(c) = m, gcd(d, m) = 1: same field as x^d - p
        for (long i = 1; i < d; ++i)
            if (f.poly.coeff(static_cast<std::size_t>(i)) != 0) return std::nullopt;
        const Rat c = f.poly.coeff(0);
        if (c == 0) return std::nullopt;
        Int m = rat_num(val_p(c, base.p).rat());
        if (gcd_int(Int(d), m) != 1) return std::nullopt;
        std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1, Rat(0));
        coeffs[0] = Rat(-static_cast<long>(base.p));
        coeffs[static_cast<std::size_t>(d)] = Rat(1);
        return eisenstein_delta(Poly(std::move(coeffs)));
    };
    switch (f.strategy) {
    case DeltaStrategy::tame:
        if (Int(d) % Int(static_cast<unsigned long>(base.p)) == 0)
            throw strategy_inapplicable("tame strategy with p | deg");
        return Int(d - 1);
    case DeltaStrategy::eisenstein:
        if (!is_eisenstein(f.poly, base.p))
            throw strategy_inapplicable("factor is not Eisenstein");
        return eisenstein_delta(f.poly);
    case DeltaStrategy::generator: {
        if (!f.generator) throw strategy_inapplicable("generator strategy without a generator");
        if (!is_eisenstein(*f.generator, base.p))
            throw strategy_inapplicable("attested generator is not Eisenstein");
        if (f.generator->degree() != d)
            throw strategy_inapplicable("attested generator has the wrong degree");
        return eisenstein_delta(*f.generator);
    }
    case DeltaStrategy::radical: {
        auto r = radical_delta();
        if (!r) throw strategy_inapplicable("factor does not have the radical shape x^d - u p^m "
                                            "with gcd(d, m) = 1");
        return *r;
    }
    case DeltaStrategy::automatic: {
        if (d == 1) return Int(0);
        if (is_eisenstein(f.poly, base.p)) return eisenstein_delta(f.poly);
        if (Int(d) % Int(static_cast<unsigned long>(base.p)) != 0) return Int(d - 1);
        if (auto r = radical_delta()) return *r;
        throw strategy_inapplicable(
            "wild non-Eisenstein factor " + f.poly.str("x", base.p) +
            ": the field discriminant needs a caller-attested Eisenstein generator");
    }
    }
    throw strategy_inapplicable("unknown strategy");
}

/* ---- discriminant bonus ----------------------------------------------------- */

DbReport db_report(const FactoredInput& input, const std::vector<Int>& deltas,
                   const BaseField& base) {
    if (deltas.size() != input.factors.size())
        throw engine_error("db_report needs one field discriminant per factor");
    DbReport out;
    FactoredPoly fp;
    fp.b = input.b;
    for (const auto& f : input.factors) fp.factors.push_back(f.poly);
    Poly full = fp.expanded(base);
    out.delta_f = rat_num(disc_val(full, base.p).rat());
    Int sum(0);
    for (const auto& d : deltas) sum += d;
    out.db = out.delta_f - sum;

    const long r = static_cast<long>(input.factors.size());
    out.rho.assign(input.factors.size(), std::vector<Int>(input.factors.size(), Int(0)));
    Int dec(0);
    for (long i = 0; i < r; ++i) {
        const Poly& fi = input.factors[static_cast<std::size_t>(i)].poly;
        Int dfi = fi.degree() == 1 ? Int(0) : rat_num(disc_val(fi, base.p).rat());
        Int dbi = dfi - deltas[static_cast<std::size_t>(i)];
        out.factor_db.push_back(dbi);
        dec += dbi;
        for (long j = i + 1; j < r; ++j) {
            const Poly& fj = input.factors[static_cast<std::size_t>(j)].poly;
            Int rho = rat_num(val_p(resultant(fi, fj), base.p).rat());
            out.rho[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rho;
            out.rho[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = rho;
            dec += 2 * rho;
        }
    }
    dec += 2 * Int(input.b) * (fp.degree() - 1);
    out.db_decomposed = dec;
    out.routes_agree = (out.db == out.db_decomposed);
    return out;
}

Int swan(const std::vector<Int>& deltas, long degree, long r) {
    Int s(r - degree);
    for (const auto& d : deltas) s += d;
    return s;
}

Int artin_negative(const std::vector<Int>& deltas, const Model& model, const FactoredPoly& f) {
    DivisorProfile prof = divisor_profile(f, model);
    DualGraph g = dual_graph(model);
    for (const auto& [a, b] : g.edges) {
        bool oa = mpz_odd_p(prof.components[a].ord.get_mpz_t());
        bool ob = mpz_odd_p(prof.components[b].ord.get_mpz_t());
        if (oa && ob)
            throw precondition_unverified("two odd components of div(f) are adjacent on the model");
    }
    Int art = 2 * Int(prof.n_even - 1);
    for (const auto& d : deltas) art += d;
    return art;
}

long genus_of_degree(long degree) {
    long dp = 2 * ((degree + 1) / 2);
    return (dp - 2) / 2;
}

/* ---- classification ---------------------------------------------------------- */

DbClassification db_bound_classify(const FactorSpec& f, const BaseField& base) {
    DbClassification out;
    Int delta = field_discriminant(f, base);
    const long d = f.poly.degree();
    Int delta_f = d == 1 ? Int(0) : rat_num(disc_val(f.poly, base.p).rat());
    out.db = delta_f - delta;

    if (d == 1 || is_eisenstein(f.poly, base.p)) {
        out.which = DbCase::linear_or_eisenstein;
        out.name = "i";
        out.n_yf0 = 1; // the v0-model carries the divisor here
        out.bound = Rat(1) + Rat(out.db) / 2;
        out.holds = Rat(out.n_yf0) <= out.bound;
        return out;
    }
    InductiveValuation vf = compute_vf(f.poly, base);
    out.n_yf0 = static_cast<long>(resolve_with_v0(vf).size());
    const long e = vf.top_rel_ram();
    const std::size_t n = vf.length();
    const Rat& l1 = vf.stages()[0].lambda;
    if (e == 2) {
        out.which = DbCase::e_two;
        out.name = "ii";
        out.bound = Rat(3) + Rat(out.db) / 2;
    } else if (n == 1 && rat_num(l1) == 2 && rat_den(l1) == d && d % 2 == 1 && d >= 3) {
        out.which = DbCase::two_over_odd;
        out.name = "iii";
        out.bound = Rat(3) + Rat(out.db) / 2;
    } else if (n == 1 && (l1 == make_rat(3, 4) || l1 == make_rat(4, 3))) {
        out.which = DbCase::three_quarters;
        out.name = "iv";
        out.bound = Rat(2) + Rat(out.db) / 2;
    } else {
        out.which = DbCase::general;
        out.name = "v";
        out.bound = Rat(1) + Rat(out.db) / 2;
    }
    out.holds = Rat(out.n_yf0) <= out.bound;
    return out;
}

ResultantBoundVerdict resultant_bounds(const Poly& f1, const Poly& f2, const BaseField& base) {
    ResultantBoundVerdict out;
    out.rho = rat_num(val_p(resultant(f1, f2), base.p).rat());
    auto lin = [&](const Poly& f) { return f.degree() == 1; };
    auto eis = [&](const Poly& f) { return is_eisenstein(f, base.p); };
    auto plain = [&](const Poly& f) { return !lin(f) && !eis(f); };

    // case (ii): root valuation a/2 (a >= 3 odd) against a deeper linear factor
    auto case_ii = [&](const Poly& a, const Poly& b) {
        if (!lin(b) || a.degree() < 2) return false;
        Value va = eval_at_root(Poly::x(), a, base);
        Value vb = val_p(b.coeff(0), base.p);
        if (va.is_infinity() || vb.is_infinity()) return false;
        const Rat& q = va.rat();
        if (rat_den(q) != 2 || rat_num(q) < 3) return false;
        return vb.rat() > q;
    };

    if (plain(f1) && plain(f2)) {
        out.case_name = "iv";
        out.lower = 4;
    } else if ((plain(f1) && f1.degree() >= 3 && eis(f2) && f2.degree() >= 2) ||
               (plain(f2) && f2.degree() >= 3 && eis(f1) && f1.degree() >= 2)) {
        out.case_name = "iii";
        out.lower = 3;
    } else if (case_ii(f1, f2) || case_ii(f2, f1)) {
        out.case_name = "ii";
        out.lower = 3;
    } else if ((eis(f1) && lin(f2)) || (eis(f2) && lin(f1)) || (lin(f1) && lin(f2))) {
        out.case_name = "i(eisenstein/linear)";
        out.lower = 1;
    } else {
        out.case_name = "i";
        out.lower = 2;
    }
    out.holds = out.rho >= out.lower;
    return out;
}

/* ---- cd_verify ----------------------------------------------------------------- */

namespace {

struct ClusterOutcome {
    ClusterReport report;
    long n_even = 0;
    long deg = 0;
    Int db = 0;
    std::vector<Int> deltas;
};

// Irreducible-path model choice: the classification of v_{f_1} picks the
// starting regular model W.
Model choose_irreducible_W(const Poly& f1, int b, const BaseField& base) {
    if (f1.degree() == 1 || is_eisenstein(f1, base.p)) {
        if (b == 0) {
            Model m(base, "pipeline:W(v0)");
            m.insert(InductiveValuation(base));
            return m;
        }
        return resolve_with_v0(compute_vf(f1, base));
    }
    InductiveValuation vf = compute_vf(f1, base);
    const long e = vf.top_rel_ram();
    const std::size_t n = vf.length();
    const Rat& l1 = vf.stages()[0].lambda;
    const long d = f1.degree();
    if (e == 2) return resolve_with_v0(successor(vf));
    if (n == 1 && rat_num(l1) == 2 && rat_den(l1) == d && d % 2 == 1)
        return b == 0 ? resolve_with_v0(precursor(vf)) : resolve_with_v0(vf);
    return resolve_with_v0(successor(vf));
}

ClusterOutcome verify_cluster(const FactoredInput& cluster, const Int& shift,
                              const BaseField& base) {
    ClusterOutcome out;
    out.report.shift = shift;
    out.report.b = cluster.b;
    FactoredPoly fp;
    fp.b = cluster.b;
    for (const auto& f : cluster.factors) {
        fp.factors.push_back(f.poly);
        out.report.factors.push_back(f.poly.str("x", base.p));
    }
    out.deg = fp.degree();
    out.report.degree = out.deg;

    PipelineResult pr = cluster.factors.size() == 1
                            ? run_pipeline_from(choose_irreducible_W(cluster.factors[0].poly,
                                                                     cluster.b, base),
                                                fp, base)
                            : run_pipeline(fp, base);

    for (const auto& c : pr.profile.components) {
        out.report.model.push_back(c.valuation.str());
        out.report.multiplicities.push_back(c.multiplicity);
        out.report.orders.push_back(c.ord);
    }
    out.report.n_even = pr.profile.n_even;
    out.report.n_odd = pr.profile.n_odd;
    out.n_even = pr.profile.n_even;
    out.report.lemult_checks = pr.trace.lemult.checks;
    out.report.verdicts = separation_reports(pr.trace);

    for (const auto& f : cluster.factors) {
        Int delta = field_discriminant(f, base);
        out.deltas.push_back(delta);
        out.report.deltas.push_back(delta);
        out.report.classifications.push_back(db_bound_classify(f, base).name);
    }
    DbReport dbr = db_report(cluster, out.deltas, base);
    if (!dbr.routes_agree)
        throw engine_error("discriminant bonus routes disagree (internal check)");
    out.db = dbr.db;
    out.report.db = dbr.db;
    out.report.rho = dbr.rho;
    return out;
}

// Split a factored input into residue clusters, shifting each so roots have
// positive valuation.
std::vector<std::pair<Int, FactoredInput>> cluster_factored(const FactoredInput& input,
                                                            const BaseField& base) {
    const Fp F = base.fp();
    std::map<std::uint64_t, FactoredInput> groups;
    for (const auto& f : input.factors) {
        if (!f.poly.is_monic() || f.poly.degree() < 1)
            throw engine_error("factors must be monic of positive degree");
        FpPoly red = reduce_mod_p(f.poly, F);
        // roots of an irreducible factor share one residue, which must be
        // rational over F_p
        auto fac = ff_factor(F, red, base.seed);
        if (fac.factors.size() != 1 || fac.factors[0].factor.degree() != 1)
            throw residue_field_obstruction("factor " + f.poly.str("x", base.p) +
                                            " has roots with an irrational or split residue");
        std::uint64_t root = F.sub(0, fac.factors[0].factor.coeff(0));
        FactorSpec shifted = f;
        if (root != 0) {
            shifted.poly = f.poly.shifted(Rat(static_cast<unsigned long>(root)));
            if (shifted.strategy == DeltaStrategy::eisenstein ||
                shifted.strategy == DeltaStrategy::radical)
                shifted.strategy = DeltaStrategy::automatic;
        }
        auto& g = groups[root];
        g.b = input.b;
        g.factors.push_back(std::move(shifted));
    }
    std::vector<std::pair<Int, FactoredInput>> out;
    for (auto& [root, g] : groups)
        out.emplace_back(Int(static_cast<unsigned long>(root)), std::move(g));
    return out;
}

CDReport aggregate(const std::vector<std::pair<Int, FactoredInput>>& clusters,
                   const Poly& full_normalized, int b, const BaseField& base) {
    CDReport rep;
    rep.p = base.p;
    rep.b = b;
    const Poly& full = full_normalized;
    long deg_monic = 0;
    for (const auto& [shift, c] : clusters)
        for (const auto& f : c.factors) deg_monic += f.poly.degree();
    rep.degree = deg_monic;
    rep.degree_prime = 2 * ((deg_monic + 1) / 2);
    rep.odd_degree_input = (deg_monic % 2 != 0);
    rep.genus = genus_of_degree(deg_monic);

    rep.delta_prime = rat_num(disc_prime_val(full, base.p).rat());
    rep.delta_f = rat_num(disc_val(full, base.p).rat());

    std::vector<ClusterOutcome> outcomes;
    for (const auto& [shift, c] : clusters) outcomes.push_back(verify_cluster(c, shift, base));

    const long s_count = static_cast<long>(clusters.size());
    long r_total = 0;
    Int sum_deltas(0);
    Int db_sum(0);
    long even_sum_big = 0; // sum over deg >= 2 clusters of (N_even - 1)
    for (auto& oc : outcomes) {
        r_total += static_cast<long>(oc.report.factors.size());
        for (const auto& d : oc.deltas) sum_deltas += d;
        db_sum += oc.db;
        if (oc.deg >= 2) even_sum_big += oc.n_even - 1;
        rep.clusters.push_back(oc.report);
    }
    // LYitoYf(vi): N_even(f) - 1 = sum_{deg >= 2} (N_even_i - 1) + b s - b
    rep.n_even = even_sum_big + b * s_count - b + 1;
    long n_total = 0;
    for (const auto& oc : outcomes)
        n_total += static_cast<long>(oc.report.model.size());
    // strict transform of the original fiber is shared across clusters
    rep.n_odd = (n_total - (s_count - 1)) - rep.n_even;

    // db(f) = sum db(h_i) + 2 b (s - 1); each cluster's db already carries
    // its own 2b(deg - 1) leading-coefficient term
    Int db_f = db_sum + 2 * Int(b) * (s_count - 1);
    rep.db = db_f;
    rep.sum_deltas = sum_deltas;
    Int direct_db = rep.delta_f - sum_deltas;
    rep.db_decomposed = direct_db;
    rep.db_routes_agree = (rep.db == direct_db);

    rep.swan_conductor = swan({sum_deltas}, deg_monic, r_total);
    rep.artin_neg = 2 * Int(rep.n_even - 1) + sum_deltas;
    rep.inequality_ok = rep.db >= 2 * Int(rep.n_even - 1);
    if (!rep.odd_degree_input) {
        bool art_ok = rep.artin_neg <= *rep.delta_prime;
        if (art_ok != rep.inequality_ok)
            throw engine_error("conductor and bonus forms of the inequality disagree (bug)");
    }
    rep.strict = rep.db > 2 * Int(rep.n_even - 1);
    rep.status = rep.inequality_ok ? 0 : 3;
    rep.status_detail = rep.inequality_ok
                            ? (rep.strict ? "inequality strict" : "inequality is an equality")
                            : "COUNTEREXAMPLE CANDIDATE: db < 2(N_even - 1)";
    return rep;
}

} // namespace

CDReport cd_verify(const FactoredInput& input, const BaseField& base) {
    try {
        if (input.factors.empty()) throw engine_error("no factors supplied");
        for (std::size_t i = 0; i < input.factors.size(); ++i)
            for (std::size_t j = i + 1; j < input.factors.size(); ++j)
                if (input.factors[i].poly == input.factors[j].poly)
                    throw inseparable_input("repeated factor");
        Poly full = Poly::constant(Rat(input.b ? static_cast<long>(base.p) : 1));
        for (const auto& f : input.factors) full = full * f.poly;
        auto clusters = cluster_factored(input, base);
        return aggregate(clusters, full, input.b, base);
    } catch (const reducible_input& e) {
        CDReport rep;
        rep.p = base.p;
        rep.status = 2;
        rep.status_detail = std::string("precondition failure: ") + e.what();
        return rep;
    } catch (const engine_error& e) {
        CDReport rep;
        rep.p = base.p;
        rep.status = 2;
        rep.status_detail = std::string("precondition failure: ") + e.what();
        return rep;
    }
}

CDReport cd_verify(const Poly& f, const BaseField& base) {
    CDReport rep;
    rep.p = base.p;
    try {
        NormalizedInput norm = normalize_input(f, base);
        rep.b = norm.b;
        rep.unit_treated_as_square = norm.unit_treated_as_square;
        auto clusters = cluster_shift(norm.monic, base);
        std::vector<std::pair<Int, FactoredInput>> grouped;
        for (const auto& c : clusters) {
            FactoredInput ci;
            ci.b = norm.b;
            // within-cluster p-adic factorization is out of scope: the
            // shifted cluster must itself be irreducible (compute_vf checks)
            ci.factors.push_back(FactorSpec{c.shifted, DeltaStrategy::automatic, std::nullopt});
            grouped.emplace_back(c.shift, std::move(ci));
        }
        Poly full = norm.monic;
        if (norm.b) full = full.scaled(Rat(static_cast<unsigned long>(base.p)));
        return aggregate(grouped, full, norm.b, base);
    } catch (const inseparable_input&) {
        rep.status = 2;
        rep.status_detail = "inseparable input: the inequality holds trivially (disc' = 0)";
        return rep;
    } catch (const engine_error& e) {
        rep.status = 2;
        rep.status_detail = std::string("precondition failure: ") + e.what();
        return rep;
    }
}

/* ---- report serialization -------------------------------------------------- */

std::string CDReport::json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["status"] = status;
    j["status_detail"] = status_detail;
    j["p"] = p;
    j["b"] = b;
    j["degree"] = degree;
    j["degree_prime"] = degree_prime;
    j["genus"] = genus;
    j["unit_treated_as_square"] = unit_treated_as_square;
    j["odd_degree_input"] = odd_degree_input;
    if (delta_prime) j["delta_prime"] = delta_prime->get_str();
    j["delta_f"] = delta_f.get_str();
    j["sum_field_discriminants"] = sum_deltas.get_str();
    j["db"] = db.get_str();
    j["db_decomposed"] = db_decomposed.get_str();
    j["db_routes_agree"] = db_routes_agree;
    j["swan"] = swan_conductor.get_str();
    j["artin_neg"] = artin_neg.get_str();
    j["n_even"] = n_even;
    j["n_odd"] = n_odd;
    j["inequality_ok"] = inequality_ok;
    j["strict"] = strict;
    j["clusters"] = nlohmann::json::array();
    for (const auto& c : clusters) {
        nlohmann::json jc;
        jc["shift"] = c.shift.get_str();
        jc["b"] = c.b;
        jc["degree"] = c.degree;
        jc["factors"] = c.factors;
        jc["model"] = c.model;
        nlohmann::json mults = nlohmann::json::array(), ords = nlohmann::json::array(),
                       dels = nlohmann::json::array();
        for (const auto& m : c.multiplicities) mults.push_back(m.get_str());
        for (const auto& o : c.orders) ords.push_back(o.get_str());
        for (const auto& d : c.deltas) dels.push_back(d.get_str());
        jc["multiplicities"] = mults;
        jc["orders"] = ords;
        jc["field_discriminants"] = dels;
        jc["n_even"] = c.n_even;
        jc["n_odd"] = c.n_odd;
        jc["db"] = c.db.get_str();
        nlohmann::json rhom = nlohmann::json::array();
        for (const auto& row : c.rho) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& x : row) jr.push_back(x.get_str());
            rhom.push_back(jr);
        }
        jc["rho"] = rhom;
        jc["classifications"] = c.classifications;
        jc["lemult_checks"] = c.lemult_checks;
        nlohmann::json verds = nlohmann::json::array();
        for (const auto& v : c.verdicts) {
            nlohmann::json jv;
            jv["name"] = v.name;
            jv["holds"] = v.holds;
            jv["detail"] = v.detail;
            verds.push_back(jv);
        }
        jc["counting_verdicts"] = verds;
        j["clusters"].push_back(jc);
    }
    return j.dump(2);
}

} // namespace maclane
