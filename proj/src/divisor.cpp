#include "maclane/divisor.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "maclane/base_arith.hpp"
#include "maclane/errors.hpp"
#include "maclane/ff_factor.hpp"

namespace maclane {

Poly FactoredPoly::expanded(const BaseField& base) const {
    Poly f = Poly::constant(Rat(1));
    for (const auto& g : factors) f = f * g;
    if (b) f = f.scaled(Rat(static_cast<unsigned long>(base.p)));
    return f;
}

/* ---- divisor profiles ---------------------------------------------------- */

namespace {

Value factored_value(const InductiveValuation& v, const FactoredPoly& f) {
    Value t(Rat(f.b)); // v(p^b) = b
    for (const auto& g : f.factors) t = t + v.evaluate(g);
    return t;
}

Int component_order(const InductiveValuation& v, const Value& val) {
    if (val.is_infinity()) throw engine_error("component order of a vanishing factor");
    Rat ord = val.rat() * Rat(v.value_group_denominator());
    if (!is_integer(ord)) throw engine_error("component order is not an integer");
    return rat_num(ord);
}

DivisorProfile profile_impl(const Model& m,
                            const std::function<Value(const InductiveValuation&)>& value_of) {
    DivisorProfile out;
    for (const auto& v : m.valuations()) {
        ComponentDivisorData d{v, v.value_group_denominator(), Int(0), true};
        d.ord = component_order(v, value_of(v));
        d.even = mpz_even_p(d.ord.get_mpz_t()) != 0;
        (d.even ? out.n_even : out.n_odd)++;
        out.components.push_back(std::move(d));
    }
    return out;
}

} // namespace

DivisorProfile divisor_profile(const Poly& f, const Model& m) {
    if (f.is_zero()) throw zero_polynomial();
    return profile_impl(m, [&](const InductiveValuation& v) { return v.evaluate(f); });
}

DivisorProfile divisor_profile(const FactoredPoly& f, const Model& m) {
    return profile_impl(m, [&](const InductiveValuation& v) { return factored_value(v, f); });
}

/* ---- specialization ------------------------------------------------------ */

namespace {

// nu_K(phi_top(alpha)) for the top key of v (x with lambda 0 at the Gauss
// valuation); +infinity when f_alpha equals the key.
Value depth_at(const InductiveValuation& v, const Poly& f_alpha) {
    const Poly key = v.is_gauss() ? Poly::x() : v.top_key();
    return eval_at_root(key, f_alpha, v.base());
}

Rat lambda_of(const InductiveValuation& v) { return v.is_gauss() ? Rat(0) : v.top_lambda(); }

} // namespace

SpecializationResult specialize(const Poly& f_alpha, const Model& m) {
    if (m.size() == 0) throw engine_error("specialize: empty model");
    const BaseField& base = m.base();
    // maximal valuation whose diskoid contains the roots of f_alpha
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& v = m.valuations()[i];
        if (!diskoid_contains(diskoid_of(v), f_alpha, base)) continue;
        if (!best || compare(m.valuations()[*best], v) == Cmp::less) best = i;
    }
    if (!best)
        throw precondition_unverified("no component of the model contains the divisor's roots "
                                      "(the model should include v0)");
    const InductiveValuation& vstar = m.valuations()[*best];

    // children of v* in the covering order whose annulus contains alpha
    DualGraph g = dual_graph(m);
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (g.parent[j] != static_cast<long>(*best)) continue;
        const auto& w = m.valuations()[j];
        Value a = eval_at_root(w.top_key(), f_alpha, base);
        if (Value(vstar.evaluate(w.top_key())) < a && a < Value(w.top_lambda())) {
            if (hit) throw engine_error("specialize: two annuli claim the divisor (bug trap)");
            hit = j;
        }
    }
    SpecializationResult r;
    if (hit) {
        r.kind = SpecializationResult::Kind::edge;
        r.v = vstar;
        r.w = m.valuations()[*hit];
    } else {
        r.kind = SpecializationResult::Kind::interior;
        r.v = vstar;
    }
    return r;
}

/* ---- blowups ------------------------------------------------------------- */

namespace {

// The exceptional valuation of blowing up the intersection point of the
// covering pair v < w: same key line as w, stage value the scaled mediant.
InductiveValuation edge_exceptional(const InductiveValuation& v, const InductiveValuation& w) {
    if (w.is_gauss()) throw unsupported_blowup_site("edge upper end cannot be the Gauss valuation");
    const Poly& psi = w.top_key();
    InductiveValuation prefix = w.truncate(w.length() - 1);
    Rat lo;
    if (val_equal(v, prefix) || (prefix.is_gauss() && v.is_gauss())) {
        Value pv = prefix.evaluate(psi);
        lo = pv.is_infinity() ? Rat(0) : pv.rat();
    } else if (!v.is_gauss() && v.top_key().degree() == psi.degree()) {
        lo = v.top_lambda();
        // sanity: v must equal [prefix, (psi, lo)]
        if (!val_equal(v, augment(prefix, psi, lo)))
            throw unsupported_blowup_site("edge pair does not lie on one key line");
    } else {
        throw unsupported_blowup_site("edge pair does not lie on one key line");
    }
    const long N = psi.degree();
    const Rat hi = w.top_lambda();
    if (!is_npath_step(hi, lo, N))
        throw unsupported_blowup_site("edge pair is not path-consecutive; refusing to guess");
    Rat x = hi * N, y = lo * N;
    x.canonicalize();
    y.canonicalize();
    Rat med(rat_num(x) + rat_num(y), rat_den(x) + rat_den(y));
    med.canonicalize();
    Rat lam = med / N;
    lam.canonicalize();
    return augment(prefix, psi, lam);
}

void check_le_mult(const InductiveValuation& exc, const FactoredPoly& f, const Int& expected,
                   BlowupStats* stats) {
    Int got = component_order(exc, factored_value(exc, f));
    if (stats) ++stats->checks;
    if (got != expected) {
        if (stats) ++stats->failures;
        throw le_mult_mismatch("exceptional order " + got.get_str() + " != branch sum " +
                               expected.get_str());
    }
}

} // namespace

Model blowup_insert(const Model& m, const SpecializationResult& site, const FactoredPoly& f,
                    const std::optional<Poly>& horizontal, long attested_horizontals,
                    BlowupStats* stats) {
    const BaseField& base = m.base();
    Model out = m;
    if (site.is_edge()) {
        InductiveValuation exc = edge_exceptional(site.v, *site.w);
        Int expected = component_order(site.v, factored_value(site.v, f)) +
                       component_order(*site.w, factored_value(*site.w, f)) +
                       Int(attested_horizontals);
        check_le_mult(exc, f, expected, stats);
        out.insert(exc);
        out.canonicalize();
        return out;
    }
    // Interior site: the exceptional valuation is determined by where the
    // horizontal sits on the component (its graded direction).
    if (!horizontal)
        throw unsupported_blowup_site("interior blowup needs the meeting horizontal divisor");
    const Poly& h = *horizontal;
    const InductiveValuation& v = site.v;
    InductiveValuation exc(base);
    const Value dv = depth_at(v, h);
    const Value lam(lambda_of(v));
    const Rat step = Rat(1) / Rat(v.value_group_denominator());
    if (dv.is_infinity() && !v.is_gauss() && v.top_key() == h) {
        // the divisor is centered on v's own key: minimal step along it
        exc = augment(v, h, v.top_lambda() + step);
    } else if (val_equal(v, compute_vf(h, base))) {
        // the divisor's own valuation: the key is h itself, with the
        // minimal value-group step (exceptional multiplicity deg h)
        Value vfh = v.evaluate(h);
        exc = augment(v, h, vfh.rat() + Rat(1) / Rat(Int(h.degree())));
    } else if (dv > lam) {
        // deeper than the component: the meet point is the deep smooth
        // point, blown up by stepping along the component's own key
        const Poly key = v.is_gauss() ? Poly::x() : v.top_key();
        exc = augment(v, key, lam.rat() + step);
    } else if (dv == lam) {
        // exactly at the component's radius: step into the divisor's
        // graded direction
        FpPoly R = residual_polynomial(v, h);
        const Fp F = base.fp();
        auto fac = ff_factor(F, R, base.seed);
        if (fac.factors.size() != 1 || fac.factors[0].factor.degree() != 1)
            throw unsupported_blowup_site("interior direction is not a single rational residue");
        const FpPoly& ell = fac.factors[0].factor;
        std::uint64_t root = F.mul(F.neg(ell.coeff(0)), F.inv(ell.coeff(1)));
        Poly lift = key_lift(v, root);
        Value base_val = v.evaluate(lift);
        exc = augment(v, lift, base_val.rat() + step);
    } else {
        throw unsupported_blowup_site("horizontal does not meet the component's interior");
    }
    Int expected = component_order(v, factored_value(v, f)) + Int(attested_horizontals);
    check_le_mult(exc, f, expected, stats);
    out.insert(exc);
    out.canonicalize();
    return out;
}

/* ---- W_f ------------------------------------------------------------------ */

Model build_Wfi(const Poly& f_i, const BaseField& base) {
    if (!f_i.is_monic() || f_i.degree() < 1)
        throw engine_error("pipeline factors must be monic of positive degree");
    if (f_i.degree() == 1 || is_eisenstein(f_i, base.p)) {
        Model m(base, "pipeline:W(v0)");
        m.insert(InductiveValuation(base));
        return m;
    }
    InductiveValuation vf = compute_vf(f_i, base);
    Model m = resolve_with_v0(vf);
    return m;
}

namespace {

struct MeetSite {
    enum class Kind { edge, interior_deep, interior_residual } kind;
    InductiveValuation v;
    std::optional<InductiveValuation> w; // edge upper end
    std::uint64_t common_root = 0;       // for interior_residual
};

// Local position of the divisor of f on the component of its maximal
// containing valuation: an edge toward a child, or interior.
std::optional<InductiveValuation> annulus_child(const Poly& f, const Model& m,
                                                std::size_t vstar_idx, const DualGraph& g) {
    const BaseField& base = m.base();
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (g.parent[j] != static_cast<long>(vstar_idx)) continue;
        const auto& w = m.valuations()[j];
        Value a = eval_at_root(w.top_key(), f, base);
        if (Value(m.valuations()[vstar_idx].evaluate(w.top_key())) < a && a < Value(w.top_lambda()))
            return w;
    }
    return std::nullopt;
}

std::size_t max_container(const Poly& f, const Model& m) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& v = m.valuations()[i];
        if (!diskoid_contains(diskoid_of(v), f, m.base())) continue;
        if (!best || compare(m.valuations()[*best], v) == Cmp::less) best = i;
    }
    if (!best) throw precondition_unverified("model does not contain the divisor (missing v0?)");
    return *best;
}

// Do the horizontal divisors of f_i and f_j meet on m, and where?
std::optional<MeetSite> meet_site(const Poly& fi, const Poly& fj, const Model& m) {
    const BaseField& base = m.base();
    std::size_t ci = max_container(fi, m);
    std::size_t cj = max_container(fj, m);
    if (!val_equal(m.valuations()[ci], m.valuations()[cj])) return std::nullopt;
    const InductiveValuation& v = m.valuations()[ci];
    DualGraph g = dual_graph(m);
    auto wi = annulus_child(fi, m, ci, g);
    auto wj = annulus_child(fj, m, cj, g);
    if (wi.has_value() != wj.has_value()) return std::nullopt;
    if (wi && wj) {
        if (!val_equal(*wi, *wj)) return std::nullopt;
        return MeetSite{MeetSite::Kind::edge, v, wi, 0};
    }
    // both interior on v: compare depths against lambda_v
    Value ai = depth_at(v, fi);
    Value aj = depth_at(v, fj);
    const Value lam(lambda_of(v));
    const bool di = ai > lam, dj = aj > lam;
    if (di && dj) return MeetSite{MeetSite::Kind::interior_deep, v, std::nullopt, 0};
    if (di != dj) return std::nullopt;
    // both sit at exactly lambda: they meet iff the residual polynomials
    // share a root (the same graded direction on the component)
    FpPoly Ri = residual_polynomial(v, fi);
    FpPoly Rj = residual_polynomial(v, fj);
    const Fp F = base.fp();
    FpPoly gcd = fp_gcd(F, Ri, Rj);
    if (gcd.degree() <= 0) return std::nullopt;
    auto fac = ff_factor(F, gcd, base.seed);
    const FpPoly& ell = fac.factors[0].factor;
    if (ell.degree() >= 2)
        throw residue_field_obstruction("common residual direction " + ell.str() +
                                        " has degree >= 2 over F_p; cannot separate exactly");
    std::uint64_t root = F.mul(F.neg(ell.coeff(0)), F.inv(ell.coeff(1)));
    return MeetSite{MeetSite::Kind::interior_residual, v, std::nullopt, root};
}

// Smallest-denominator rational in [lo, hi] (Stern-Brocot simplest), with
// hi possibly +infinity; 0 <= lo <= hi.
Rat simplest_in(const Rat& lo, const Value& hi) {
    if (hi.is_infinity() || Value(Rat(ceil_rat(lo))) <= hi) return Rat(ceil_rat(lo));
    const Rat& h = hi.rat();
    if (lo == h) return lo;
    Int k = floor_rat(lo);
    Rat fl = lo - Rat(k), fh = h - Rat(k);
    if (fl == 0) return Rat(k);
    // recurse on the inverted fractional parts (order swaps)
    Rat inner = simplest_in(1 / fh, Value(1 / fl));
    Rat out = Rat(k) + 1 / inner;
    out.canonicalize();
    return out;
}

// Candidate values for a separating deepening: any value in the closed
// interval of the two divisors' depths splits their specializations
// (exactly-at versus deeper-than, or annulus-below versus inside).  The
// endpoints and the simplest rational between them cover the shapes the
// resultant-bound recipes use; the caller picks the cheapest.
std::vector<Rat> separating_candidates(const Value& a, const Value& b) {
    if (a.is_infinity() && b.is_infinity())
        throw engine_error("two equal factors in the pipeline");
    std::vector<Rat> out;
    auto push = [&out](const Rat& q) {
        for (const auto& x : out)
            if (x == q) return;
        out.push_back(q);
    };
    if (a.is_infinity() || b.is_infinity()) {
        const Rat& lo = a.is_infinity() ? b.rat() : a.rat();
        push(lo);
        push(simplest_in(lo, Value::infinity()));
        return out;
    }
    const Rat& lo = a < b ? a.rat() : b.rat();
    const Rat& hi = a < b ? b.rat() : a.rat();
    push(lo);
    push(simplest_in(lo, Value(hi)));
    push(hi);
    return out;
}

// Grow m by the resolution of [v-chain, (key, mu)] for the candidate mu
// that adds the fewest components (ties to the smallest value).
void deepen_cheapest(Model& m, const InductiveValuation& v, const Poly& key,
                     const std::vector<Rat>& candidates) {
    std::optional<Model> best;
    std::optional<Rat> best_mu;
    for (const Rat& mu : candidates) {
        Model grown = model_union(m, resolve_with_v0(augment(v, key, mu)));
        if (!best || grown.size() < best->size() ||
            (grown.size() == best->size() && mu < *best_mu)) {
            best = std::move(grown);
            best_mu = mu;
        }
    }
    m = std::move(*best);
}

// One separation refinement toward splitting the pair at the given site.
void refine_at(Model& m, const MeetSite& site, const Poly& fi, const Poly& fj) {
    const BaseField& base = m.base();
    switch (site.kind) {
    case MeetSite::Kind::edge: {
        // insert the mediant valuation of the edge (no multiplicity check
        // here: horizontal branches need not be regular mid-separation)
        InductiveValuation exc = edge_exceptional(site.v, *site.w);
        m.insert(exc);
        m.canonicalize();
        return;
    }
    case MeetSite::Kind::interior_deep: {
        const Poly key = site.v.is_gauss() ? Poly::x() : site.v.top_key();
        deepen_cheapest(m, site.v, key,
                        separating_candidates(depth_at(site.v, fi), depth_at(site.v, fj)));
        return;
    }
    case MeetSite::Kind::interior_residual: {
        Poly lift = key_lift(site.v, site.common_root);
        deepen_cheapest(m, site.v, lift,
                        separating_candidates(eval_at_root(lift, fi, base),
                                              eval_at_root(lift, fj, base)));
        return;
    }
    }
}

} // namespace

Model build_Wf(const FactoredPoly& f, const BaseField& base, PipelineTrace* trace) {
    if (f.factors.empty()) throw engine_error("pipeline needs at least one factor");
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        for (std::size_t j = i + 1; j < f.factors.size(); ++j)
            if (f.factors[i] == f.factors[j]) throw inseparable_input("repeated factor");

    std::vector<Model> wfi;
    for (const auto& g : f.factors) wfi.push_back(build_Wfi(g, base));
    Model m = wfi[0];
    for (std::size_t i = 1; i < wfi.size(); ++i) m = model_union(m, wfi[i]);
    m.canonicalize();

    PipelineTrace local;
    PipelineTrace& t = trace ? *trace : local;
    t.r = static_cast<long>(f.factors.size());
    t.b = f.b;
    t.c = 1;
    t.s = 0;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const auto& g = f.factors[i];
        const bool eis = is_eisenstein(g, base.p);
        if (g.degree() > 1 && !eis) ++t.s;
        if (eis) t.c = std::max(t.c, g.degree());
        t.N_Wfi.push_back(static_cast<long>(wfi[i].size()));
    }
    t.N_Z = static_cast<long>(m.size());
    t.rho.assign(f.factors.size(), std::vector<Int>(f.factors.size(), Int(0)));
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
            Value rv = val_p(resultant(f.factors[i], f.factors[j]), base.p);
            t.rho[i][j] = t.rho[j][i] = rat_num(rv.rat());
        }

    // separate the horizontal divisors pairwise
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
            Int guard = t.rho[i][j] * 2 + 16;
            Int steps(0);
            while (auto site = meet_site(f.factors[i], f.factors[j], m)) {
                refine_at(m, *site, f.factors[i], f.factors[j]);
                if (++steps > guard)
                    throw separation_divergence("separating factors " + std::to_string(i) + "," +
                                                std::to_string(j) + " exceeded the resultant bound");
            }
        }
    }
    m.canonicalize();
    t.N_Wf = static_cast<long>(m.size());

    // r' for the vertical-separation bound: non-linear non-Eisenstein
    // factors whose v_f component is even for f on W_f
    t.rprime = 0;
    for (const auto& g : f.factors) {
        if (g.degree() == 1 || is_eisenstein(g, base.p)) continue;
        InductiveValuation vf = compute_vf(g, base);
        if (auto idx = m.index_of(vf)) {
            Int ord = component_order(m.valuations()[*idx], factored_value(m.valuations()[*idx], f));
            if (mpz_even_p(ord.get_mpz_t())) ++t.rprime;
        }
    }
    return m;
}

Model build_Vf(Model m, const FactoredPoly& f, const BaseField& base, PipelineTrace* trace) {
    (void)base;
    PipelineTrace local;
    PipelineTrace& t = trace ? *trace : local;
    long guard = 4 * (t.r ? t.r : static_cast<long>(f.factors.size())) +
                 2 * static_cast<long>(f.degree()) + 2 * t.c + 32;
    for (long step = 0;; ++step) {
        if (step > guard) throw separation_divergence("V_f separation exceeded its bound");
        bool touched = false;
        for (const auto& g : f.factors) {
            SpecializationResult site = specialize(g, m);
            auto odd_at = [&](const InductiveValuation& v) {
                Int ord = component_order(v, factored_value(v, f));
                return mpz_odd_p(ord.get_mpz_t()) != 0;
            };
            if (site.is_edge()) {
                if (!odd_at(site.v) && !odd_at(*site.w)) continue;
                m = blowup_insert(m, site, f, g, 1, &t.lemult);
                touched = true;
                break;
            }
            if (!odd_at(site.v)) continue;
            // interior contact with an odd component: blow up the meeting
            // point (the exceptional direction is derived inside)
            m = blowup_insert(m, site, f, g, 1, &t.lemult);
            touched = true;
            break;
        }
        if (!touched) break;
    }
    m.canonicalize();
    t.N_Vf = static_cast<long>(m.size());
    return m;
}

Model build_Yf(Model m, const FactoredPoly& f, const BaseField& base, PipelineTrace* trace) {
    (void)base;
    PipelineTrace local;
    PipelineTrace& t = trace ? *trace : local;
    for (long step = 0;; ++step) {
        if (step > 4 * static_cast<long>(m.size()) + 64)
            throw separation_divergence("Y_f separation exceeded its bound");
        DualGraph g = dual_graph(m);
        auto odd_at = [&](std::size_t i) {
            Int ord =
                component_order(m.valuations()[i], factored_value(m.valuations()[i], f));
            return mpz_odd_p(ord.get_mpz_t()) != 0;
        };
        std::optional<std::pair<std::size_t, std::size_t>> pick;
        for (const auto& [a, b2] : g.edges) {
            if (odd_at(a) && odd_at(b2)) {
                pick = {a, b2};
                break; // edges follow the canonical root-to-leaves order
            }
        }
        if (!pick) break;
        SpecializationResult site;
        site.kind = SpecializationResult::Kind::edge;
        site.v = m.valuations()[pick->first];
        site.w = m.valuations()[pick->second];
        m = blowup_insert(m, site, f, std::nullopt, 0, &t.lemult);
    }
    m.canonicalize();
    t.N_Yf = static_cast<long>(m.size());
    DivisorProfile prof = divisor_profile(f, m);
    t.N_Yf_even = prof.n_even;
    t.N_Yf_odd = prof.n_odd;
    return m;
}

namespace {

PipelineResult finish_pipeline(Model w, const FactoredPoly& f, const BaseField& base,
                               PipelineTrace trace) {
    PipelineResult out{Model(base), std::move(trace), {}};
    Model v = build_Vf(std::move(w), f, base, &out.trace);
    out.model = build_Yf(std::move(v), f, base, &out.trace);
    out.profile = divisor_profile(f, out.model);
    return out;
}

} // namespace

PipelineResult run_pipeline(const FactoredPoly& f, const BaseField& base) {
    PipelineTrace trace;
    Model w = build_Wf(f, base, &trace);
    return finish_pipeline(std::move(w), f, base, std::move(trace));
}

PipelineResult run_pipeline_from(Model w, const FactoredPoly& f, const BaseField& base) {
    PipelineTrace trace;
    trace.r = static_cast<long>(f.factors.size());
    trace.b = f.b;
    trace.c = 1;
    for (const auto& g : f.factors) {
        const bool eis = is_eisenstein(g, base.p);
        if (g.degree() > 1 && !eis) ++trace.s;
        if (eis) trace.c = std::max(trace.c, g.degree());
    }
    trace.N_Wf = static_cast<long>(w.size());
    return finish_pipeline(std::move(w), f, base, std::move(trace));
}

std::vector<InequalityVerdict> separation_reports(const PipelineTrace& t) {
    std::vector<InequalityVerdict> out;
    const long r = t.r;
    if (r < 2) return out;
    Int sum_rho(0);
    for (std::size_t i = 0; i < t.rho.size(); ++i)
        for (std::size_t j = i + 1; j < t.rho.size(); ++j) sum_rho += t.rho[i][j];
    Int sum_wfi(0);
    for (long n : t.N_Wfi) sum_wfi += (n - 1);
    const long s = t.s;
    const long c = t.c;
    const int b = t.b;

    {
        InequalityVerdict v{"Cresbound", true, true, ""};
        Int penalty = Int(r) * (r - 1) / 2 + 3 * Int(s) * (s - 1) / 2 + Int(s) * (r - s) + (s - 1);
        Int boundv = sum_wfi + sum_rho - penalty;
        v.holds = Int(t.N_Wf - 1) <= boundv;
        v.detail = "N_Wf-1 = " + std::to_string(t.N_Wf - 1) + " <= " + boundv.get_str();
        out.push_back(v);
    }
    if (r == 2 && !t.N_Wfi.empty()) {
        InequalityVerdict v{"Presbound", true, true, ""};
        const bool v0_1 = t.N_Wfi[0] == 1;
        const bool v0_2 = t.N_Wfi[1] == 1;
        Int slack = v0_1 && v0_2 ? Int(0) : (v0_1 || v0_2 ? Int(2) : Int(4));
        Int boundv = t.rho[0][1] - slack;
        v.holds = Int(t.N_Wf - t.N_Z) <= boundv;
        v.detail = "N_Wf-N_Z = " + std::to_string(t.N_Wf - t.N_Z) + " <= " + boundv.get_str();
        out.push_back(v);
    }
    {
        InequalityVerdict v{"Pverticalsep", true, true, ""};
        long boundv = r - t.rprime + b * (c - 1);
        v.holds = (t.N_Vf - t.N_Wf) <= boundv;
        v.detail = "N_Vf-N_Wf = " + std::to_string(t.N_Vf - t.N_Wf) + " <= " + std::to_string(boundv);
        out.push_back(v);
    }
    {
        InequalityVerdict v{"Pvfcount", true, true, ""};
        Int boundv = sum_wfi + sum_rho + 2 + Int(b) * c - 2 * Int(s);
        Int lhs(t.N_Vf - 1);
        v.holds = lhs <= boundv;
        if (lhs == boundv && !(r == 2 && s == 1 && b == 0)) v.holds = false;
        v.detail = "N_Vf-1 = " + lhs.get_str() + " <= " + boundv.get_str();
        out.push_back(v);
    }
    {
        InequalityVerdict v{"Cyfcount", true, true, ""};
        Int boundv = sum_wfi + sum_rho + 1 + Int(b) * c - 2 * Int(s);
        Int lhs(t.N_Yf_even - 1);
        v.holds = lhs <= boundv;
        if (lhs == boundv && !(r == 2 && s == 1 && b == 0)) v.holds = false;
        v.detail = "N_Yf_even-1 = " + lhs.get_str() + " <= " + boundv.get_str();
        out.push_back(v);
    }
    return out;
}

} // namespace maclane
