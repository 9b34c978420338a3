#ifndef MACLANE_BASE_ARITH_HPP
#define MACLANE_BASE_ARITH_HPP

/* The exact arithmetic substrate: p-adic valuations on Q, Gauss valuations,
 * resultants and discriminants, Newton polygons, reductions to F_p. */

#include <cstdint>
#include <utility>
#include <vector>

#include "maclane/base_field.hpp"
#include "maclane/fp.hpp"
#include "maclane/poly.hpp"
#include "maclane/rat.hpp"

namespace maclane {

/// p-adic valuation of an integer; val(0) = +infinity.
Value val_p(const Int& n, std::uint64_t p);
/// p-adic valuation of a rational; val(0) = +infinity, val(p) = 1.
Value val_p(const Rat& q, std::uint64_t p);

/// Minimum coefficient valuation; +infinity for the zero polynomial.
Value gauss_val(const Poly& f, std::uint64_t p);

/// Exact resultant via the subresultant PRS (Sylvester-determinant agreement
/// is enforced by the test suite's independent oracle).
Rat resultant(const Poly& f, const Poly& g);

/// disc(f) at declared degree deg(f); the discriminant of a linear
/// polynomial is 1 by convention.
Rat discriminant(const Poly& f);
/// disc'(f): f viewed as a polynomial of degree 2*ceil(deg(f)/2).
/// For odd degree this is lead(f)^2 * disc(f).
Rat discriminant_prime(const Poly& f);

/// Valuation of disc(f); throws inseparable_input when disc(f) = 0.
Value disc_val(const Poly& f, std::uint64_t p);
/// Valuation of disc'(f); throws inseparable_input when disc'(f) = 0.
Value disc_prime_val(const Poly& f, std::uint64_t p);

/// One lower-hull segment of the Newton polygon, reported as the common
/// valuation of the segment's roots.  Segments are listed with decreasing
/// root valuation; a zero root (f(0) = 0) contributes a +infinity segment.
/// Convention: root_valuation = -(slope of the hull of points (i, val a_i)),
/// so "all roots have positive valuation" is exactly "every reported
/// root_valuation is > 0".
struct NewtonSegment {
    Value root_valuation;
    long length = 0; // number of roots on the segment
};

std::vector<NewtonSegment> newton_polygon(const Poly& f, std::uint64_t p);

/// True iff every root of f has strictly positive valuation.
bool all_roots_positive(const Poly& f, std::uint64_t p);

/// Reduce a polynomial with p-integral coefficients mod p.
FpPoly reduce_mod_p(const Poly& f, const Fp& F);

/// Monic with positive-valuation non-leading coefficients and constant term
/// of valuation exactly 1.
bool is_eisenstein(const Poly& f, std::uint64_t p);

/// Resultant with respect to y of f(y) and g(x, y), where g is given as a
/// polynomial in y with Poly coefficients (used to assemble minimal
/// polynomials of sums of algebraic elements).  Computed by evaluation /
/// interpolation, exactly.
Poly resultant_y(const Poly& f_of_y, const std::vector<Poly>& g_coeffs_in_y);

/// Minimal polynomial of (root of f) + (root of g): Res_y(f(y), g(x - y)).
Poly compose_sum(const Poly& f, const Poly& g);

} // namespace maclane

#endif
