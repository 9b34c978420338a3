#ifndef MACLANE_VALUATION_HPP
#define MACLANE_VALUATION_HPP

/* Inductive (Mac Lane) valuations on Q(x) lying over the p-adic valuation:
 * a chain of stages [v0, v1(phi_1)=lambda_1, ..., vn(phi_n)=lambda_n] with
 * monic integral key polynomials of strictly increasing degree.
 *
 * The residue field F_p emulates an algebraically closed field, so every
 * residual computation that would behave differently over the closure
 * raises residue_field_obstruction instead of answering.  Consequences kept
 * as invariants here: every stage's residual polynomial is linear, and
 * deg(phi_i) equals the value-group denominator of the truncation below it.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maclane/base_arith.hpp"
#include "maclane/base_field.hpp"
#include "maclane/poly.hpp"
#include "maclane/rat.hpp"

namespace maclane {

class InductiveValuation;

/// phi-adic expansion g = sum a_j phi^j with deg a_j < deg phi.
std::vector<Poly> phi_expansion(const Poly& g, const Poly& phi);

struct Stage {
    Poly phi;
    Rat lambda;
    // e(v_s / v_{s-1}): index of the previous value group in this one.
    long rel_ram = 1;
    // Value-group denominator of the truncation strictly below this stage.
    Int den_below = 1;
    // Root in F_p of this key's residual polynomial over the truncation
    // below; it is the constant that the previous stage's graded variable
    // becomes once this stage exists.
    std::uint64_t residual_root = 0;
};

enum class Cmp { less, equal, greater, incomparable };

class InductiveValuation {
  public:
    /// Placeholder over an unconfigured base; usable only after assignment.
    InductiveValuation() = default;
    /// The Gauss valuation v0.
    explicit InductiveValuation(BaseField base) : base_(base) {}

    const BaseField& base() const { return base_; }
    const std::vector<Stage>& stages() const { return stages_; }
    bool is_gauss() const { return stages_.empty(); }
    std::size_t length() const { return stages_.size(); }

    const Poly& top_key() const;
    const Rat& top_lambda() const;
    long top_rel_ram() const;

    /// lcm of the stage denominators: Gamma_v = (1/den) Z.
    Int value_group_denominator() const;

    Value evaluate(const Poly& g) const;

    InductiveValuation truncate(std::size_t i) const;

    /// Canonical printed form, e.g. "[v0, v1(x)=3/8, v2(x^3-p)=7/6]".
    std::string str() const;

    friend Cmp compare(const InductiveValuation& v, const InductiveValuation& w);

    // --- internal-but-shared machinery (used by resolution/divisor code) --

    /// Residue in F_p of the minimal-value normalized form of g, where g has
    /// degree below the next key degree of the length-`upto` truncation.
    std::uint64_t graded_residue(std::size_t upto, const Poly& g) const;

    /// Canonical monomial exponents (p, phi_1..phi_upto) of value mu in the
    /// value group of the length-`upto` truncation.
    std::vector<Int> monomial_exponents(std::size_t upto, const Rat& mu) const;

    /// The monomial itself as a polynomial (p-exponent may be negative).
    Poly monomial_poly(std::size_t upto, const Rat& mu) const;

    /// Residue of a value-zero monomial in (p, phi_1..phi_L); L < length().
    std::uint64_t monomial_residue(std::size_t L, std::vector<Int> exps) const;

  private:
    friend InductiveValuation augment(const InductiveValuation&, const Poly&, const Rat&);
    friend class ValuationBuilder;

    Value evaluate_prefix(std::size_t upto, const Poly& g) const;

    BaseField base_;
    std::vector<Stage> stages_;
};

/// True iff phi is a proper key polynomial over v.  Raises
/// residue_field_obstruction when F_p and its algebraic closure would
/// disagree (irreducible residual of degree >= 2).
bool is_key(const InductiveValuation& v, const Poly& phi);

/// Residual polynomial of g with respect to v's top stage (for v0: the
/// reduction of g divided by its Gauss power of p, as a polynomial in the
/// residue of x).
FpPoly residual_polynomial(const InductiveValuation& v, const Poly& g);

/// The augmented valuation [v, v'(phi) = lambda].  A phi of the same degree
/// as the current top key replaces the top stage (same-degree refinement),
/// keeping chains in the canonical strictly-increasing form.
InductiveValuation augment(const InductiveValuation& v, const Poly& phi, const Rat& lambda);

/// e(w/v) = den(w)/den(v); requires the value group of w to contain that of v.
Int ram_index(const InductiveValuation& w, const InductiveValuation& v);

Cmp compare(const InductiveValuation& v, const InductiveValuation& w);
inline bool leq(const InductiveValuation& v, const InductiveValuation& w) {
    Cmp c = compare(v, w);
    return c == Cmp::less || c == Cmp::equal;
}
inline bool val_equal(const InductiveValuation& v, const InductiveValuation& w) {
    return compare(v, w) == Cmp::equal;
}

/// Canonical monic lift of a residual root to the next key polynomial over
/// v: phi_top^e - r * (canonical monomial of value e*lambda_top).
Poly key_lift(const InductiveValuation& v, std::uint64_t root);

/// The unique Mac Lane valuation over which the monic irreducible f (with
/// all roots of positive valuation) is a proper key polynomial.
InductiveValuation compute_vf(const Poly& f, const BaseField& base);

/// nu_K(g(alpha)) for alpha any root of f; +infinity iff f divides g.
Value eval_at_root(const Poly& g, const Poly& f, const BaseField& base);

struct Diskoid {
    Poly center;  // monic irreducible
    Rat radius;   // >= 0
};

Diskoid diskoid_of(const InductiveValuation& v);
InductiveValuation valuation_of(const Diskoid& d, const BaseField& base);
/// Do the roots of f lie in D, i.e. is eval_at_root(center, f) >= radius?
bool diskoid_contains(const Diskoid& d, const Poly& f, const BaseField& base);

} // namespace maclane

#endif
