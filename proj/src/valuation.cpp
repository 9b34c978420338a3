#include "maclane/valuation.hpp"

#include <algorithm>
#include <cassert>

#include "maclane/errors.hpp"
#include "maclane/ff_factor.hpp"

namespace maclane {

std::vector<Poly> phi_expansion(const Poly& g, const Poly& phi) {
    std::vector<Poly> out;
    if (phi.degree() < 1) throw engine_error("expansion key must have positive degree");
    Poly rest = g;
    while (!rest.is_zero()) {
        Poly q, r;
        rest.divmod(phi, q, r);
        out.push_back(r);
        rest = q;
    }
    if (out.empty()) out.push_back(Poly::zero());
    return out;
}

const Poly& InductiveValuation::top_key() const {
    if (stages_.empty()) throw engine_error("the Gauss valuation has no key polynomial");
    return stages_.back().phi;
}

const Rat& InductiveValuation::top_lambda() const {
    if (stages_.empty()) throw engine_error("the Gauss valuation has no stage value");
    return stages_.back().lambda;
}

long InductiveValuation::top_rel_ram() const {
    return stages_.empty() ? 1 : stages_.back().rel_ram;
}

Int InductiveValuation::value_group_denominator() const {
    if (stages_.empty()) return Int(1);
    return stages_.back().den_below * stages_.back().rel_ram;
}

Value InductiveValuation::evaluate_prefix(std::size_t upto, const Poly& g) const {
    if (g.is_zero()) return Value::infinity();
    if (upto == 0) return gauss_val(g, base_.p);
    const Stage& st = stages_[upto - 1];
    Value best = Value::infinity();
    long j = 0;
    for (const Poly& a : phi_expansion(g, st.phi)) {
        if (!a.is_zero()) {
            Value term = evaluate_prefix(upto - 1, a) + Value(st.lambda * j);
            best = min_value(best, term);
        }
        ++j;
    }
    return best;
}

Value InductiveValuation::evaluate(const Poly& g) const {
    return evaluate_prefix(stages_.size(), g);
}

InductiveValuation InductiveValuation::truncate(std::size_t i) const {
    if (i > stages_.size()) throw engine_error("truncation index exceeds inductive length");
    InductiveValuation v(base_);
    v.stages_.assign(stages_.begin(), stages_.begin() + static_cast<long>(i));
    return v;
}

std::string InductiveValuation::str() const {
    std::string s = "[v0";
    for (std::size_t i = 0; i < stages_.size(); ++i) {
        std::string key = stages_[i].phi.str("x", base_.p);
        std::erase(key, ' '); // canonical bracket form is compact
        s += ", v" + std::to_string(i + 1) + "(" + key + ")=" + stages_[i].lambda.get_str();
    }
    return s + "]";
}

/* ---- graded residues ---------------------------------------------------- */

std::vector<Int> InductiveValuation::monomial_exponents(std::size_t upto, const Rat& mu) const {
    std::vector<Int> exps(upto + 1, Int(0));
    Rat rem = mu;
    for (std::size_t s = upto; s >= 1; --s) {
        const Stage& st = stages_[s - 1];
        bool found = false;
        for (long m = 0; m < st.rel_ram; ++m) {
            Rat r = rem - st.lambda * m;
            if (is_integer(r * Rat(st.den_below))) {
                exps[s] = m;
                rem = r;
                found = true;
                break;
            }
        }
        if (!found) throw engine_error("value not in the stage value group");
    }
    if (!is_integer(rem)) throw engine_error("value not in the value group");
    exps[0] = rat_num(rem);
    return exps;
}

Poly InductiveValuation::monomial_poly(std::size_t upto, const Rat& mu) const {
    std::vector<Int> exps = monomial_exponents(upto, mu);
    Rat c(1);
    const Rat P(static_cast<unsigned long>(base_.p));
    Int k = exps[0];
    if (k >= 0) {
        for (Int i = 0; i < k; ++i) c *= P;
    } else {
        for (Int i = 0; i < -k; ++i) c /= P;
    }
    Poly r = Poly::constant(c);
    for (std::size_t s = 1; s <= upto; ++s) {
        unsigned long e = mpz_get_ui(exps[s].get_mpz_t());
        if (e) r = r * stages_[s - 1].phi.pow(e);
    }
    return r;
}

std::uint64_t InductiveValuation::monomial_residue(std::size_t L, std::vector<Int> exps) const {
    if (L + 1 > stages_.size() + 1 || exps.size() != L + 1)
        throw engine_error("monomial_residue: bad exponent vector");
    const Fp F = base_.fp();
    std::uint64_t acc = 1;
    for (std::size_t s = L; s >= 1; --s) {
        const Stage& st = stages_[s - 1];
        Int q, m;
        mpz_fdiv_qr(q.get_mpz_t(), m.get_mpz_t(), exps[s].get_mpz_t(),
                    Int(st.rel_ram).get_mpz_t());
        if (q != 0) {
            // phi_s^{e_s} reduces to residual_root(stage s+1) times the
            // canonical monomial of value e_s * lambda_s.
            if (s >= stages_.size())
                throw engine_error("monomial_residue: overflow at the top stage");
            std::uint64_t t = stages_[s].residual_root;
            if (t == 0) throw engine_error("monomial_residue: zero graded constant");
            bool negq = q < 0;
            Int qa = negq ? Int(-q) : q;
            if (!qa.fits_ulong_p()) throw engine_error("monomial_residue: huge exponent");
            std::uint64_t tp = F.pow(t, mpz_get_ui(qa.get_mpz_t()));
            if (negq) tp = F.inv(tp);
            acc = F.mul(acc, tp);
            std::vector<Int> low = monomial_exponents(s - 1, st.lambda * st.rel_ram);
            for (std::size_t i = 0; i < s; ++i) exps[i] += q * low[i];
        }
        exps[s] = m;
        if (m != 0) throw engine_error("monomial_residue: monomial has nonzero value");
    }
    if (exps[0] != 0) throw engine_error("monomial_residue: monomial has nonzero value");
    return acc;
}

std::uint64_t InductiveValuation::graded_residue(std::size_t upto, const Poly& g) const {
    if (g.is_zero()) throw zero_polynomial();
    const Fp F = base_.fp();
    if (upto == 0) {
        if (g.degree() != 0) throw engine_error("graded_residue: nonconstant at level 0");
        const Rat& c = g.coeff(0);
        Rat unit = c;
        Value v = val_p(c, base_.p);
        Rat P(static_cast<unsigned long>(base_.p));
        Int k = rat_num(v.rat());
        if (k >= 0)
            for (Int i = 0; i < k; ++i) unit /= P;
        else
            for (Int i = 0; i < -k; ++i) unit *= P;
        return reduce_mod_p(Poly::constant(unit), F).coeff(0);
    }
    const Stage& st = stages_[upto - 1];
    auto coeffs = phi_expansion(g, st.phi);
    if (static_cast<long>(coeffs.size()) > st.rel_ram)
        throw engine_error("graded_residue: degree too large for this level");
    // The minimal-value term is unique because j*lambda are distinct modulo
    // the previous value group for 0 <= j < rel_ram.
    std::size_t best = coeffs.size();
    Value bestval = Value::infinity();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        Value t = evaluate_prefix(upto - 1, coeffs[j]) + Value(st.lambda * static_cast<long>(j));
        if (t < bestval) {
            bestval = t;
            best = j;
        }
    }
    assert(best < coeffs.size());
    return graded_residue(upto - 1, coeffs[best]);
}

FpPoly residual_polynomial(const InductiveValuation& v, const Poly& g) {
    if (g.is_zero()) throw zero_polynomial();
    const Fp F = v.base().fp();
    if (v.is_gauss()) {
        Value gv = gauss_val(g, v.base().p);
        Rat P(static_cast<unsigned long>(v.base().p));
        Rat scale(1);
        Int k = rat_num(gv.rat());
        if (k >= 0)
            for (Int i = 0; i < k; ++i) scale /= P;
        else
            for (Int i = 0; i < -k; ++i) scale *= P;
        return reduce_mod_p(g.scaled(scale), F);
    }
    const auto& stages = v.stages();
    const Stage& top = stages.back();
    const std::size_t prev = stages.size() - 1;
    const long e = top.rel_ram;

    auto coeffs = phi_expansion(g, top.phi);
    std::vector<Value> vals(coeffs.size(), Value::infinity());
    Value mu = Value::infinity();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        vals[j] = v.truncate(prev).evaluate(coeffs[j]) + Value(top.lambda * static_cast<long>(j));
        mu = min_value(mu, vals[j]);
    }
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (vals[j] == mu) support.push_back(j);
    const std::size_t j0 = support.front();
    const Rat mu0 = v.truncate(prev).evaluate(coeffs[j0]).rat();
    std::vector<Int> base0 = v.monomial_exponents(prev, mu0);
    std::vector<Int> step = v.monomial_exponents(prev, top.lambda * e);

    FpPoly R;
    R.c.assign((support.back() - j0) / static_cast<std::size_t>(e) + 1, 0);
    for (std::size_t j : support) {
        if ((j - j0) % static_cast<std::size_t>(e) != 0)
            throw engine_error("residual support off the expected residue class");
        const std::size_t q = (j - j0) / static_cast<std::size_t>(e);
        std::uint64_t rho = v.graded_residue(prev, coeffs[j]);
        std::vector<Int> exps = v.monomial_exponents(prev, v.truncate(prev).evaluate(coeffs[j]).rat());
        for (std::size_t i = 0; i <= prev; ++i) exps[i] += Int(static_cast<long>(q)) * step[i] - base0[i];
        rho = F.mul(rho, v.monomial_residue(prev, std::move(exps)));
        R.c[q] = rho;
    }
    R.trim();
    return R;
}

/* ---- keys and augmentation ---------------------------------------------- */

namespace {

// Shared key test; on success returns the residual root (the residual is
// linear z - r, or for v0 a linear reduction x - r).
std::optional<std::uint64_t> key_root(const InductiveValuation& v, const Poly& phi) {
    if (!phi.is_monic() || phi.degree() < 1) return std::nullopt;
    if (!phi.is_p_integral(v.base().p)) return std::nullopt;
    const Fp F = v.base().fp();
    const Int D = v.value_group_denominator();
    Int k_q, rem;
    mpz_fdiv_qr(k_q.get_mpz_t(), rem.get_mpz_t(), Int(phi.degree()).get_mpz_t(), D.get_mpz_t());
    if (rem != 0) return std::nullopt;
    const Int k = k_q;

    FpPoly R = residual_polynomial(v, phi);
    if (k == 1) {
        if (R.degree() != 1) return std::nullopt;
        return F.mul(F.neg(R.coeff(0)), F.inv(R.coeff(1)));
    }
    // degree a proper multiple of the key degree: a key here would need an
    // irreducible residual of degree k, which splits over the closure.
    if (R.degree() >= 2 && Int(R.degree()) == k && fp_is_irreducible(F, R, v.base().seed))
        throw residue_field_obstruction(
            "residual polynomial " + R.str() + " is irreducible of degree " +
            std::to_string(R.degree()) + " over F_p but splits over the residue closure");
    return std::nullopt;
}

} // namespace

bool is_key(const InductiveValuation& v, const Poly& phi) {
    return key_root(v, phi).has_value();
}

InductiveValuation augment(const InductiveValuation& v, const Poly& phi, const Rat& lambda) {
    if (!phi.is_monic() || phi.degree() < 1 || !phi.is_p_integral(v.base().p))
        throw not_key_polynomial("augmentation key must be monic, integral, of positive degree");
    if (!(lambda > 0))
        throw lambda_too_small("stage value must be positive");
    Value vphi = v.evaluate(phi);
    if (!(Value(lambda) > vphi))
        throw lambda_too_small("declared value " + lambda.get_str() + " is not above v(phi) = " +
                               vphi.str());

    InductiveValuation base = v;
    if (!v.is_gauss() && phi.degree() == v.top_key().degree())
        base = v.truncate(v.length() - 1); // same-degree refinement replaces the top
    auto root = key_root(base, phi);
    if (!root)
        throw not_key_polynomial(phi.str("x", v.base().p) + " is not a key polynomial over " +
                                 base.str());

    Stage st;
    st.phi = phi;
    st.lambda = lambda;
    st.den_below = base.value_group_denominator();
    // smallest e >= 1 with e*lambda in (1/den_below) Z
    Rat scaled = lambda * Rat(st.den_below);
    st.rel_ram = static_cast<long>(mpz_get_ui(rat_den(scaled).get_mpz_t()));
    st.residual_root = *root;
    InductiveValuation out = base;
    out.stages_.push_back(std::move(st));
    return out;
}

Int ram_index(const InductiveValuation& w, const InductiveValuation& v) {
    Int dw = w.value_group_denominator();
    Int dv = v.value_group_denominator();
    if (!mpz_divisible_p(dw.get_mpz_t(), dv.get_mpz_t()))
        throw incompatible_value_groups("value group of the first argument does not contain the second's");
    return dw / dv;
}

Cmp compare(const InductiveValuation& v, const InductiveValuation& w) {
    if (!(v.base() == w.base())) throw engine_error("comparing valuations over different bases");
    // v <= w iff the diskoid of w is contained in the diskoid of v, iff
    // w(phi_v) >= lambda_v.
    bool vw = v.is_gauss() || w.evaluate(v.top_key()) >= Value(v.top_lambda());
    bool wv = w.is_gauss() || v.evaluate(w.top_key()) >= Value(w.top_lambda());
    if (vw && wv) return Cmp::equal;
    if (vw) return Cmp::less;
    if (wv) return Cmp::greater;
    return Cmp::incomparable;
}

Poly key_lift(const InductiveValuation& v, std::uint64_t root) {
    const std::uint64_t p = v.base().p;
    const Rat r(static_cast<unsigned long>(root % p));
    if (v.is_gauss()) return Poly({-r, Rat(1)});
    const Stage& top = v.stages().back();
    Poly mono = v.monomial_poly(v.length() - 1, top.lambda * top.rel_ram);
    if (!mono.is_p_integral(p)) throw engine_error("key lift produced a non-integral monomial");
    return v.top_key().pow(static_cast<unsigned long>(top.rel_ram)) - mono.scaled(r);
}

/* ---- the v_f approximation ---------------------------------------------- */

namespace {

std::string slope_diagnostic(const std::vector<NewtonSegment>& segs) {
    std::string s = "newton polygon slopes:";
    for (const auto& seg : segs)
        s += " (" + seg.root_valuation.str() + " x" + std::to_string(seg.length) + ")";
    return s;
}

} // namespace

InductiveValuation compute_vf(const Poly& f, const BaseField& base) {
    const std::uint64_t p = base.p;
    if (!f.is_monic() || f.degree() < 1)
        throw engine_error("compute_vf requires a monic polynomial of positive degree");
    if (!f.is_p_integral(p)) throw engine_error("compute_vf requires p-integral coefficients");
    const long d = f.degree();

    if (d == 1) {
        if (!(val_p(f.coeff(0), p) > Value(0)))
            throw non_positive_roots("the root of " + f.str("x", p) + " has valuation <= 0");
        return InductiveValuation(base);
    }
    // all roots must have strictly positive valuation and f(0) != 0
    if (f.coeff(0) == 0)
        throw reducible_input("x divides the input", "factor x detected");
    auto segs = newton_polygon(f, p);
    for (const auto& seg : segs)
        if (!(seg.root_valuation > Value(0)))
            throw non_positive_roots(slope_diagnostic(segs));
    if (segs.size() > 1) throw reducible_input("multiple Newton polygon slopes", slope_diagnostic(segs));

    InductiveValuation chain(base); // confirmed stages
    Poly phi = Poly::x();
    const Fp F = base.fp();
    for (int guard = 0; guard < 4096; ++guard) {
        const long m = d / phi.degree();
        if (m * phi.degree() != d) throw engine_error("compute_vf: key degree does not divide deg f");
        auto coeffs = phi_expansion(f, phi);
        // single-slope phi-polygon from (m, 0) down to (0, V_0)
        if (static_cast<long>(coeffs.size()) != m + 1 || coeffs.back() != Poly::constant(Rat(1)))
            throw engine_error("compute_vf: unexpected expansion shape");
        Value v0 = chain.evaluate(coeffs[0]);
        if (v0.is_infinity())
            throw reducible_input("key polynomial divides the input",
                                  "factor " + phi.str("x", p) + " detected");
        const Rat lambda = v0.rat() / m;
        for (long j = 1; j < m; ++j) {
            if (coeffs[static_cast<std::size_t>(j)].is_zero()) continue;
            Value vj = chain.evaluate(coeffs[static_cast<std::size_t>(j)]);
            if (vj < Value(lambda * (m - j)))
                throw reducible_input("phi-adic Newton polygon has several slopes",
                                      "break at phi-power " + std::to_string(j) + " over " +
                                          chain.str() + " with key " + phi.str("x", p));
        }
        if (!(Value(lambda) > chain.evaluate(phi)))
            throw engine_error("compute_vf: no value improvement (unexpected)");

        // relative ramification of the candidate stage
        Rat scaled = lambda * Rat(chain.value_group_denominator());
        const Int e_den = rat_den(scaled);
        if (!e_den.fits_slong_p()) throw engine_error("compute_vf: denominator overflow");
        const long e = mpz_get_si(e_den.get_mpz_t());

        if (m == e) // f itself is a proper key polynomial over [chain, (phi, lambda)]
            return augment(chain, phi, lambda);

        InductiveValuation cand = augment(chain, phi, lambda);
        FpPoly R = residual_polynomial(cand, f);
        if (R.degree() != m / e)
            throw engine_error("compute_vf: residual degree mismatch");
        auto fac = ff_factor(F, R, base.seed);
        if (fac.factors.size() != 1) {
            std::string diag = "residual factors over " + cand.str() + ":";
            for (const auto& q : fac.factors)
                diag += " (" + q.factor.str() + ")^" + std::to_string(q.multiplicity);
            throw reducible_input("distinct residual factors", diag);
        }
        const FpPoly& ell = fac.factors[0].factor;
        if (ell.degree() >= 2)
            throw residue_field_obstruction("residual factor " + ell.str() +
                                            " is irreducible of degree " +
                                            std::to_string(ell.degree()) +
                                            " over F_p but splits over the residue closure");
        const std::uint64_t root = F.mul(F.neg(ell.coeff(0)), F.inv(ell.coeff(1)));
        if (root == 0) throw engine_error("compute_vf: zero residual root (unexpected)");
        Poly next = key_lift(cand, root);
        if (e == 1) {
            phi = next; // same-degree refinement, chain unchanged
        } else {
            chain = cand;
            phi = next;
        }
    }
    throw engine_error("compute_vf did not converge (internal bug trap)");
}

Value eval_at_root(const Poly& g, const Poly& f, const BaseField& base) {
    if (g.is_zero()) return Value::infinity();
    Poly r = g.mod(f);
    if (r.is_zero()) return Value::infinity(); // f | g, reported as +infinity
    return compute_vf(f, base).evaluate(r);
}

/* ---- diskoids ------------------------------------------------------------ */

Diskoid diskoid_of(const InductiveValuation& v) {
    if (v.is_gauss()) return Diskoid{Poly::x(), Rat(0)};
    return Diskoid{v.top_key(), v.top_lambda()};
}

InductiveValuation valuation_of(const Diskoid& d, const BaseField& base) {
    if (d.radius < 0) throw engine_error("diskoid radius must be nonnegative");
    if (d.radius == 0) return InductiveValuation(base);
    InductiveValuation w = compute_vf(d.center, base);
    if (Value(d.radius) > w.evaluate(d.center)) return augment(w, d.center, d.radius);
    for (std::size_t i = 1; i <= w.length(); ++i) {
        InductiveValuation Pi = w.truncate(i);
        if (!(Pi.evaluate(d.center) >= Value(d.radius))) continue;
        // first level reaching the radius; solve for the stage value mu with
        // min_j (c_j + j*mu) = radius on the phi_i-expansion of the center
        InductiveValuation Pprev = w.truncate(i - 1);
        const Poly& phi = w.stages()[i - 1].phi;
        auto coeffs = phi_expansion(d.center, phi);
        Rat mu;
        bool have = false;
        for (std::size_t j = 1; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            Value cj = Pprev.evaluate(coeffs[j]);
            if (cj.is_infinity()) continue;
            Rat cand = (d.radius - cj.rat()) / static_cast<long>(j);
            if (!have || cand > mu) {
                mu = cand;
                have = true;
            }
        }
        if (!have) throw engine_error("valuation_of: degenerate center expansion");
        if (!(Value(mu) > Pprev.evaluate(phi))) return Pprev;
        InductiveValuation out = augment(Pprev, phi, mu);
        if (out.evaluate(d.center) != Value(d.radius))
            throw engine_error("valuation_of: radius inversion failed");
        return out;
    }
    throw engine_error("valuation_of: unreachable");
}

bool diskoid_contains(const Diskoid& d, const Poly& f, const BaseField& base) {
    return eval_at_root(d.center, f, base) >= Value(d.radius);
}

} // namespace maclane
