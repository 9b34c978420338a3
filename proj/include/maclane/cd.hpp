#ifndef MACLANE_CD_HPP
#define MACLANE_CD_HPP

/* End-to-end conductor-discriminant verification: input normalization,
 * residue-split clustering with Hensel lifting, field discriminants,
 * the discriminant bonus and its decomposition, Swan and Artin conductors,
 * the component-count classification, and the final verdict. */

#include <optional>
#include <string>
#include <vector>

#include "maclane/divisor.hpp"
#include "maclane/resolution.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

/* How the valuation of disc(K_i/K) is obtained for a factor. */
enum class DeltaStrategy {
    automatic,  // pick among the strategies below (degree 1 / Eisenstein /
                // tame / radical); error if none applies
    tame,       // p does not divide deg f: delta = deg f - 1
    eisenstein, // f Eisenstein: delta = val disc(f)
    generator,  // caller-attested Eisenstein generator of the same field
    radical     // f = x^d - u p^m with gcd(d, m) = 1: reduce to x^d - p
};

struct FactorSpec {
    Poly poly;
    DeltaStrategy strategy = DeltaStrategy::automatic;
    std::optional<Poly> generator; // for DeltaStrategy::generator
};

struct FactoredInput {
    int b = 0;
    std::vector<FactorSpec> factors;
};

struct NormalizedInput {
    int b = 0;
    Poly monic;                 // f = (unit square) * p^b * monic
    bool unit_treated_as_square = false;
    Int lead_val = 0;           // p-adic valuation of the original lead
};

/// Square extraction on the leading coefficient (units are squares under
/// the residue-closure emulation; p^2 powers are absorbed); separability
/// check.  The result must stay p-integral.
NormalizedInput normalize_input(const Poly& f, const BaseField& base);

struct Cluster {
    Poly lifted;   // exact monic factor of the input with these roots
    Int shift;     // residue representative a: roots of lifted(x + a) have
                   // positive valuation
    Poly shifted;  // lifted(x + shift)
};

/// Split by root residues (which must all lie in F_p), recovering the exact
/// rational cluster factors by Hensel lifting with doubling precision plus
/// an exact divisibility verification.
std::vector<Cluster> cluster_shift(const Poly& monic, const BaseField& base);

Int field_discriminant(const FactorSpec& f, const BaseField& base);

struct DbReport {
    Int delta_f;       // val disc(f) at declared degree
    Int db;            // delta_f - sum of field discriminants
    Int db_decomposed; // sum db(f_i) + 2 sum rho + 2b(deg f - 1)
    bool routes_agree = false;
    std::vector<Int> factor_db;
    std::vector<std::vector<Int>> rho;
};

DbReport db_report(const FactoredInput& input, const std::vector<Int>& deltas,
                   const BaseField& base);

/// Swan conductor from the field discriminants: r - deg f + sum Delta_i.
Int swan(const std::vector<Int>& deltas, long degree, long r);
/// -Art = 2(N_even - 1) + sum Delta_i; verifies that no two odd components
/// of the model are adjacent before answering.
Int artin_negative(const std::vector<Int>& deltas, const Model& model, const FactoredPoly& f);
long genus_of_degree(long degree);

enum class DbCase { linear_or_eisenstein, e_two, two_over_odd, three_quarters, general };

struct DbClassification {
    DbCase which = DbCase::general;
    std::string name;
    Int db;
    long n_yf0 = 0; // components of the minimal resolution of {v0, v_f}
    Rat bound;      // the asserted bound on n_yf0
    bool holds = false;
};

DbClassification db_bound_classify(const FactorSpec& f, const BaseField& base);

struct ResultantBoundVerdict {
    std::string case_name;
    Int rho;
    long lower = 0;
    bool holds = false;
};

/// Case detection and verification of the pairwise resultant lower bounds.
ResultantBoundVerdict resultant_bounds(const Poly& f1, const Poly& f2, const BaseField& base);

struct ClusterReport {
    Int shift = 0;
    int b = 0;
    long degree = 0;
    std::vector<std::string> factors;
    std::vector<std::string> model; // valuation strings of the final Y model
    std::vector<Int> multiplicities;
    std::vector<Int> orders;
    long n_even = 0;
    long n_odd = 0;
    Int db = 0;
    std::vector<Int> deltas;
    std::vector<std::vector<Int>> rho; // pairwise resultant valuations
    std::vector<std::string> classifications;
    // counting-inequality verdicts from the pipeline trace
    std::vector<InequalityVerdict> verdicts;
    long lemult_checks = 0;
};

struct CDReport {
    int status = 2; // 0 verified, 2 precondition failure, 3 counterexample candidate
    std::string status_detail;
    std::uint64_t p = 0;
    int b = 0;
    long degree = 0;
    long degree_prime = 0;
    long genus = 0;
    bool unit_treated_as_square = false;
    bool odd_degree_input = false;
    std::optional<Int> delta_prime; // val disc'(f), absent when inseparable
    Int delta_f = 0;                // val disc(f) of the normalized input
    Int sum_deltas = 0;
    Int db = 0;
    Int db_decomposed = 0;
    bool db_routes_agree = false;
    Int swan_conductor = 0;
    Int artin_neg = 0;
    long n_even = 0;
    long n_odd = 0;
    bool inequality_ok = false;
    bool strict = false;
    std::vector<ClusterReport> clusters;
    std::string json() const;
};

/// Full pipeline on a pre-factored input (all roots of positive valuation).
CDReport cd_verify(const FactoredInput& input, const BaseField& base);
/// Full pipeline on a raw polynomial: normalize, cluster, shift, verify per
/// cluster, aggregate.  Within-cluster p-adic factorization is not
/// attempted: a cluster whose shifted polynomial is reducible over the
/// p-adics must be supplied pre-factored.
CDReport cd_verify(const Poly& f, const BaseField& base);

} // namespace maclane

#endif
