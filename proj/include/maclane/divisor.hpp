#ifndef MACLANE_DIVISOR_HPP
#define MACLANE_DIVISOR_HPP

/* Divisor orders and parities of f on model components, specialization of
 * horizontal divisors, blowup insertion with the multiplicity check, and
 * the W_f -> V_f -> Y_f separation pipeline.
 *
 * Horizontal divisors are represented only by their minimal polynomials;
 * every geometric question is decided by valuation inequalities and
 * residual polynomials. */

#include <optional>
#include <vector>

#include "maclane/resolution.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

/// f = p^b * f_1 ... f_r with monic irreducible factors.
struct FactoredPoly {
    int b = 0;
    std::vector<Poly> factors;

    long degree() const {
        long d = 0;
        for (const auto& f : factors) d += f.degree();
        return d;
    }
    Poly expanded(const BaseField& base) const;
};

struct ComponentDivisorData {
    InductiveValuation valuation;
    Int multiplicity;
    Int ord;   // multiplicity * v(f), always an integer
    bool even; // parity of ord
};

struct DivisorProfile {
    std::vector<ComponentDivisorData> components;
    long n_even = 0;
    long n_odd = 0;
};

DivisorProfile divisor_profile(const Poly& f, const Model& m);
DivisorProfile divisor_profile(const FactoredPoly& f, const Model& m);

struct SpecializationResult {
    enum class Kind { interior, edge } kind = Kind::interior;
    InductiveValuation v;          // the component met, or the lower end of the edge
    std::optional<InductiveValuation> w; // the upper end for edge sites

    bool is_edge() const { return kind == Kind::edge; }
};

/// Locate where the horizontal divisor of f_alpha meets the special fiber
/// of the m-model: the interior of one component, or the intersection point
/// of a covering pair.
SpecializationResult specialize(const Poly& f_alpha, const Model& m);

struct BlowupStats {
    long checks = 0;
    long failures = 0;
};

/// Blow up the intersection point of the covering pair (site.v, site.w), or
/// the interior meeting point of the horizontal divisor of `horizontal`
/// (which must satisfy one of the recognized interior configurations).
/// `attested_horizontals` is the number of regular horizontal branches of
/// div(f) through the blown-up point; the exceptional component's order of
/// f must equal the sum of the branch orders, else le_mult_mismatch.
Model blowup_insert(const Model& m, const SpecializationResult& site, const FactoredPoly& f,
                    const std::optional<Poly>& horizontal, long attested_horizontals,
                    BlowupStats* stats);

/// W_{f_i}: the v0-model for linear or Eisenstein factors, else the minimal
/// resolution of the {v0, v_{f_i}}-model.
Model build_Wfi(const Poly& f_i, const BaseField& base);

struct PipelineTrace {
    long r = 0;
    int b = 0;
    long s = 0;       // factors neither linear nor Eisenstein
    long c = 1;       // largest Eisenstein degree (1 if none)
    long rprime = 0;  // non-linear/Eisenstein factors whose v_f component is even on W_f
    std::vector<long> N_Wfi;
    long N_Z = 0;
    long N_Wf = 0;
    long N_Vf = 0;
    long N_Yf = 0;
    long N_Yf_even = 0;
    long N_Yf_odd = 0;
    std::vector<std::vector<Int>> rho; // pairwise resultant valuations
    BlowupStats lemult;
};

Model build_Wf(const FactoredPoly& f, const BaseField& base, PipelineTrace* trace);
/// V_f: separates horizontal components from odd vertical components.
Model build_Vf(Model w, const FactoredPoly& f, const BaseField& base, PipelineTrace* trace);
/// Y_f: separates odd vertical components from each other.
Model build_Yf(Model v, const FactoredPoly& f, const BaseField& base, PipelineTrace* trace);

struct PipelineResult {
    Model model; // the final Y_f
    PipelineTrace trace;
    DivisorProfile profile;
};

/// Full W -> V -> Y run for a factored input with positive-valuation roots.
PipelineResult run_pipeline(const FactoredPoly& f, const BaseField& base);
/// Same, but starting from a caller-chosen regular model W (the irreducible
/// case picks W from the classification of v_{f_1}).
PipelineResult run_pipeline_from(Model w, const FactoredPoly& f, const BaseField& base);

struct InequalityVerdict {
    std::string name;
    bool applicable = true;
    bool holds = true;
    std::string detail;
};

/// Verifies the counting inequalities for the recorded pipeline run
/// (separating-blowup bounds, V and Y component counts, equality cases).
std::vector<InequalityVerdict> separation_reports(const PipelineTrace& t);

} // namespace maclane

#endif
