#ifndef MACLANE_RESOLUTION_HPP
#define MACLANE_RESOLUTION_HPP

/* Normal models of P^1 as finite sets of inductive valuations, their
 * minimal regular resolutions via shortest N-paths, successor/precursor
 * valuations, dual graphs, and the component-count bounds. */

#include <optional>
#include <string>
#include <vector>

#include "maclane/npath.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

class Model {
  public:
    explicit Model(BaseField base, std::string provenance = {})
        : base_(base), provenance_(std::move(provenance)) {}

    const BaseField& base() const { return base_; }
    const std::vector<InductiveValuation>& valuations() const { return vals_; }
    const std::string& provenance() const { return provenance_; }
    std::size_t size() const { return vals_.size(); }

    /// Insert unless an equal valuation is already present; returns true if
    /// the model grew.
    bool insert(const InductiveValuation& v);
    bool contains(const InductiveValuation& v) const;
    std::optional<std::size_t> index_of(const InductiveValuation& v) const;

    /// Multiplicity of the component = e(v/v0) = value-group denominator.
    Int multiplicity(std::size_t i) const { return vals_[i].value_group_denominator(); }

    /// Deterministic order: by chain length, then stagewise (deg, lambda).
    void canonicalize();

  private:
    BaseField base_;
    std::vector<InductiveValuation> vals_;
    std::string provenance_;
};

struct DualGraph {
    // edge list over model indices; parent[i] is the unique neighbor toward
    // the root (the minimal valuation), or -1 at the root.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<long> parent;
    bool is_tree = false;
    // order-theoretic covering graph; geometric identification is only
    // guaranteed for resolution-constructed models
    bool resolution_constructed = false;
};

DualGraph dual_graph(const Model& m);

/// Valuation set of the minimal regular resolution of the v-model.
Model resolve(const InductiveValuation& v);
/// Minimal regular resolution of the {v0, v}-model.
Model resolve_with_v0(const InductiveValuation& v);

/// Successor valuation: top value replaced by the entry directly following
/// lambda_n in the shortest N_n-path down to e(v_{n-1}/v_{n-2}) lambda_{n-1};
/// collapses to the truncation at the degenerate endpoint.
InductiveValuation successor(const InductiveValuation& v);
/// Precursor valuation: top value replaced by the entry directly preceding
/// lambda_n in the shortest N_n-path from ceil(N_n lambda_n)/N_n down.
InductiveValuation precursor(const InductiveValuation& v);

struct YFamily {
    Model y0;       // minimal resolution of the {v0, v_f}-model
    Model y0_prime; // same for the successor valuation
    Model y0_dblprime; // same for the precursor valuation
};

YFamily y_family(const Poly& f, const BaseField& base);

/// Set union; requires a common valuation (regularity is preserved for
/// regular inputs sharing a component).
Model model_union(const Model& s, const Model& t);

struct StageCount {
    long v_path = 0;      // number of v_{i,lambda} components
    long w_path = 0;      // number of w_{i-1,lambda} components
    Rat bound;            // combined bound for this stage
    bool holds = true;
};

struct CountBounds {
    Rat B;      // bound with lambda_0 = floor(lambda_1)
    Rat B0;     // bound with lambda_0 = 0
    long actual_resolve = 0;
    long actual_resolve_v0 = 0;
    bool total_bound_holds = false;        // |resolve| <= B + 1 (+ improvement)
    bool total_bound_v0_holds = false;     // |resolve_with_v0| <= B0 + 1
    Rat easier_B0;                          // floor(deg phi_n * lambda_n) + e
    bool easier_holds = false;              // B0 <= easier_B0
    bool easier_strict_expected = false;    // strict unless n=1 or (n=2, Eisenstein phi_2)
    bool easier_strictness_ok = false;
    Rat operative;                          // floor(deg phi_n lambda_n) + e + 1 (improved for 3/c)
    bool operative_holds = false;
    bool improved_3c = false;               // lambda_1 = 3/c with c >= 5
    std::vector<StageCount> stages;
    bool all_hold = false;
};

CountBounds count_bounds(const InductiveValuation& vf);

} // namespace maclane

#endif
