#include "maclane/resolution.hpp"

#include <algorithm>

#include "maclane/errors.hpp"

namespace maclane {

bool Model::insert(const InductiveValuation& v) {
    if (contains(v)) return false;
    vals_.push_back(v);
    return true;
}

bool Model::contains(const InductiveValuation& v) const { return index_of(v).has_value(); }

std::optional<std::size_t> Model::index_of(const InductiveValuation& v) const {
    for (std::size_t i = 0; i < vals_.size(); ++i)
        if (val_equal(vals_[i], v)) return i;
    return std::nullopt;
}

void Model::canonicalize() {
    std::sort(vals_.begin(), vals_.end(),
              [](const InductiveValuation& a, const InductiveValuation& b) {
                  if (a.length() != b.length()) return a.length() < b.length();
                  for (std::size_t i = 0; i < a.length(); ++i) {
                      const auto& sa = a.stages()[i];
                      const auto& sb = b.stages()[i];
                      if (sa.phi.degree() != sb.phi.degree())
                          return sa.phi.degree() < sb.phi.degree();
                      if (sa.lambda != sb.lambda) return sa.lambda < sb.lambda;
                      if (sa.phi != sb.phi) return sa.phi.key_less(sb.phi);
                  }
                  return false;
              });
}

DualGraph dual_graph(const Model& m) {
    const std::size_t n = m.size();
    DualGraph g;
    g.parent.assign(n, -1);
    // the covering relation of the partial order: parent = maximal strict
    // lower bound (unique on trees)
    for (std::size_t i = 0; i < n; ++i) {
        long best = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (compare(m.valuations()[j], m.valuations()[i]) != Cmp::less) continue;
            if (best < 0 ||
                compare(m.valuations()[static_cast<std::size_t>(best)], m.valuations()[j]) ==
                    Cmp::less)
                best = static_cast<long>(j);
        }
        g.parent[i] = best;
        if (best >= 0) g.edges.emplace_back(static_cast<std::size_t>(best), i);
    }
    long roots = 0;
    for (long p : g.parent)
        if (p < 0) ++roots;
    g.is_tree = (n == 0) || (roots == 1 && g.edges.size() == n - 1);
    g.resolution_constructed = m.provenance().find("resolution") != std::string::npos ||
                               m.provenance().find("pipeline") != std::string::npos;
    return g;
}

namespace {

// Common engine behind resolve / resolve_with_v0: lambda_0 is floor(lambda_1)
// for the bare resolution and 0 when v0 is thrown in.
Model resolve_impl(const InductiveValuation& v, bool with_v0, std::vector<StageCount>* stage_counts) {
    Model m(v.base(), with_v0 ? "resolution+v0" : "resolution");
    if (v.is_gauss()) {
        m.insert(v);
        return m;
    }
    const auto& stages = v.stages();
    const std::size_t n = stages.size();

    // N_i = deg(phi_i); lambda_0 per convention; e(v_0/v_-1) = 1.
    std::vector<Rat> lambda(n + 1);
    lambda[0] = with_v0 ? Rat(0) : Rat(floor_rat(stages[0].lambda));
    for (std::size_t i = 1; i <= n; ++i) lambda[i] = stages[i - 1].lambda;

    for (std::size_t i = 1; i <= n; ++i) {
        StageCount sc;
        const long Ni = stages[i - 1].phi.degree();
        InductiveValuation prefix = v.truncate(i - 1);
        // v_{i,lam}: shortest N_i-path from beta_i = ceil(N_i lambda_i)/N_i
        // down to lambda_i
        Rat beta(ceil_rat(lambda[i] * Ni), Ni);
        beta.canonicalize();
        if (beta == lambda[i]) {
            m.insert(v.truncate(i));
            sc.v_path = 1;
        } else {
            NPath path = shortest_npath(beta, lambda[i], Ni);
            for (const Rat& lam : path.entries) {
                m.insert(augment(prefix, stages[i - 1].phi, lam));
                ++sc.v_path;
            }
        }
        // w_{i-1,lam}: shortest N_i-path from lambda_i down to
        // e(v_{i-1}/v_{i-2}) lambda_{i-1}, endpoints excluded
        const long e_prev = (i >= 2) ? stages[i - 2].rel_ram : 1;
        Rat lower = lambda[i - 1] * e_prev;
        lower.canonicalize();
        if (lambda[i] > lower) {
            NPath path = shortest_npath(lambda[i], lower, Ni);
            for (std::size_t k = 1; k + 1 < path.entries.size(); ++k) {
                m.insert(augment(prefix, stages[i - 1].phi, path.entries[k]));
                ++sc.w_path;
            }
        }
        if (stage_counts) stage_counts->push_back(sc);
    }
    // tilde v_0 = [v0, v1(phi_1) = lambda_0] (v0 itself when lambda_0 = 0),
    // plus the integer stage values below it when v0 is thrown in
    if (lambda[0] == 0) {
        m.insert(InductiveValuation(v.base()));
    } else {
        m.insert(augment(v.truncate(0), stages[0].phi, lambda[0]));
    }
    if (with_v0) {
        // resolve() with lambda_0 = 0 already includes every integer stage
        // value down to 1 via the w_{0,lam} path, so nothing more to add.
    }
    m.canonicalize();
    return m;
}

} // namespace

Model resolve(const InductiveValuation& v) { return resolve_impl(v, false, nullptr); }

Model resolve_with_v0(const InductiveValuation& v) { return resolve_impl(v, true, nullptr); }

InductiveValuation successor(const InductiveValuation& v) {
    if (v.is_gauss()) throw not_defined("the Gauss valuation has no successor");
    const auto& stages = v.stages();
    const std::size_t n = stages.size();
    const long Nn = stages[n - 1].phi.degree();
    const long e_prev = (n >= 2) ? stages[n - 2].rel_ram : 1;
    Rat lambda0 = (n >= 2) ? stages[n - 2].lambda : Rat(floor_rat(stages[0].lambda));
    Rat lower = lambda0 * e_prev;
    lower.canonicalize();
    if (!(stages[n - 1].lambda > lower))
        throw not_defined("top stage value is already at the path endpoint");
    NPath path = shortest_npath(stages[n - 1].lambda, lower, Nn);
    const Rat& next = path.entries[1];
    if (next == lower) {
        // degenerate augmentation: collapses to the truncation (or to
        // [v0, (phi_1, floor lambda_1)], which for lambda_1 < 1 is v0)
        if (n >= 2) return v.truncate(n - 1);
        if (lambda0 == 0) return v.truncate(0);
        return augment(v.truncate(0), stages[0].phi, lambda0);
    }
    return augment(v.truncate(n - 1), stages[n - 1].phi, next);
}

InductiveValuation precursor(const InductiveValuation& v) {
    if (v.is_gauss()) throw not_defined("the Gauss valuation has no precursor");
    const auto& stages = v.stages();
    const std::size_t n = stages.size();
    const long Nn = stages[n - 1].phi.degree();
    Rat beta(ceil_rat(stages[n - 1].lambda * Nn), Nn);
    beta.canonicalize();
    if (beta == stages[n - 1].lambda)
        throw not_defined("top stage value is integral in the previous value group");
    NPath path = shortest_npath(beta, stages[n - 1].lambda, Nn);
    const Rat& prev = path.entries[path.entries.size() - 2];
    return augment(v.truncate(n - 1), stages[n - 1].phi, prev);
}

YFamily y_family(const Poly& f, const BaseField& base) {
    InductiveValuation vf = compute_vf(f, base);
    if (vf.is_gauss())
        return YFamily{resolve_with_v0(vf), Model(base), Model(base)};
    YFamily out{resolve_with_v0(vf), Model(base), Model(base)};
    out.y0_prime = resolve_with_v0(successor(vf));
    out.y0_dblprime = resolve_with_v0(precursor(vf));
    return out;
}

Model model_union(const Model& s, const Model& t) {
    bool overlap = false;
    for (const auto& v : t.valuations())
        if (s.contains(v)) {
            overlap = true;
            break;
        }
    if (!overlap) throw disjoint_union();
    Model m = s;
    for (const auto& v : t.valuations()) m.insert(v);
    m.canonicalize();
    return m;
}

CountBounds count_bounds(const InductiveValuation& vf) {
    CountBounds out;
    if (vf.is_gauss()) throw not_defined("count bounds need at least one stage");
    const auto& stages = vf.stages();
    const std::size_t n = stages.size();

    auto stage_term = [&](std::size_t i, const Rat& lambda0) -> Rat {
        const long Ni = stages[i - 1].phi.degree();
        const Rat& li = stages[i - 1].lambda;
        const Rat lprev = (i >= 2) ? stages[i - 2].lambda : lambda0;
        const long e_prev = (i >= 2) ? stages[i - 2].rel_ram : 1;
        Rat t = Rat(floor_rat(li * Ni)) - Rat(Ni) * (lprev * e_prev) + Rat(stages[i - 1].rel_ram);
        t.canonicalize();
        return t;
    };
    Rat l0_floor(floor_rat(stages[0].lambda));
    out.B = 0;
    out.B0 = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        out.B += stage_term(i, l0_floor);
        out.B0 += stage_term(i, Rat(0));
    }

    // actual counts and per-stage path sizes
    std::vector<StageCount> scounts;
    Model plain = resolve_impl(vf, false, &scounts);
    Model withv0 = resolve_impl(vf, true, nullptr);
    out.actual_resolve = static_cast<long>(plain.size());
    out.actual_resolve_v0 = static_cast<long>(withv0.size());

    const Rat& l1 = stages[0].lambda;
    out.improved_3c = (rat_num(l1) == 3 && rat_den(l1) >= 5);
    Rat improve = out.improved_3c ? Rat(1) : Rat(0);
    out.total_bound_holds = Rat(out.actual_resolve) <= out.B + 1 - improve;
    out.total_bound_v0_holds = Rat(out.actual_resolve_v0) <= out.B0 + 1 - improve;

    const long Nn = stages[n - 1].phi.degree();
    const long e = stages[n - 1].rel_ram;
    out.easier_B0 = Rat(floor_rat(stages[n - 1].lambda * Nn)) + Rat(e);
    out.easier_holds = out.B0 <= out.easier_B0;
    out.easier_strict_expected =
        !(n == 1 || (n == 2 && is_eisenstein(stages[1].phi, vf.base().p)));
    out.easier_strictness_ok = !out.easier_strict_expected || out.B0 < out.easier_B0;

    out.operative = out.easier_B0 + 1 - improve;
    out.operative_holds = Rat(out.actual_resolve_v0) <= out.operative;

    // per-stage bounds: v-path count <= e(v_i/v_{i-1}); combined count <=
    // floor(N_i lambda_i) - N_i e(v_{i-1}/v_{i-2}) lambda_{i-1} + e_i,
    // with lambda_0 = floor(lambda_1)
    for (std::size_t i = 1; i <= n; ++i) {
        StageCount sc = scounts[i - 1];
        sc.bound = stage_term(i, l0_floor);
        if (i == 1 && out.improved_3c) sc.bound -= 1;
        bool v_ok = sc.v_path <= stages[i - 1].rel_ram;
        bool both_ok = Rat(sc.v_path + sc.w_path) <= sc.bound;
        sc.holds = v_ok && both_ok;
        out.stages.push_back(sc);
    }

    out.all_hold = out.total_bound_holds && out.total_bound_v0_holds && out.easier_holds &&
                   out.easier_strictness_ok && out.operative_holds;
    for (const auto& sc : out.stages) out.all_hold = out.all_hold && sc.holds;
    return out;
}

} // namespace maclane
