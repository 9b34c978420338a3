#ifndef MACLANE_POLY_HPP
#define MACLANE_POLY_HPP

/* Dense univariate polynomials with exact rational coefficients.
 * Coefficient 0 is the constant term; no trailing zero coefficients are
 * stored, so degree() is size-1 (and -1 for the zero polynomial). */

#include <cstddef>
#include <string>
#include <vector>

#include "maclane/rat.hpp"

namespace maclane {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }
    /// a * x^k
    static Poly monomial(const Rat& a, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& lead() const { return c_.back(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& s) const;
    Poly pow(unsigned long e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division by a nonzero divisor; exact over Q.
    void divmod(const Poly& divisor, Poly& quot, Poly& rem) const;
    Poly mod(const Poly& divisor) const;
    /// True iff divisor divides *this exactly.
    bool divisible_by(const Poly& divisor) const;

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    /// The composition p(x + a).
    Poly shifted(const Rat& a) const;

    /// Least common multiple of coefficient denominators (1 for zero).
    Int denominator_lcm() const;
    /// True iff every coefficient has nonnegative p-adic valuation.
    bool is_p_integral(std::uint64_t p) const;

    /// Ordering key used for deterministic printing: degree, then coefficients.
    bool key_less(const Poly& o) const;

    std::string str(const std::string& var = "x", std::uint64_t p_literal = 0) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// gcd over Q, monic by convention (used for separability checks).
Poly poly_gcd(Poly a, Poly b);

} // namespace maclane

#endif
