#ifndef MACLANE_RAT_HPP
#define MACLANE_RAT_HPP

/* Exact rational scalars and the extended value type (rational or +infinity)
 * that every valuation in the engine returns. */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "maclane/errors.hpp"

namespace maclane {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// A valuation value: a rational number or +infinity (the value of 0).
class Value {
  public:
    Value() : inf_(false), q_(0) {}
    Value(const Rat& q) : inf_(false), q_(q) {} // NOLINT(google-explicit-constructor)
    Value(long n) : inf_(false), q_(n) {}        // NOLINT(google-explicit-constructor)
    static Value infinity() {
        Value v;
        v.inf_ = true;
        return v;
    }

    bool is_infinity() const { return inf_; }
    /// The finite rational; calling this on +infinity is a logic error.
    const Rat& rat() const {
        if (inf_) throw engine_error("attempt to use +infinity as a finite value");
        return q_;
    }

    Value operator+(const Value& o) const {
        if (inf_ || o.inf_) return infinity();
        return Value(q_ + o.q_);
    }
    Value operator*(long n) const {
        if (inf_) return infinity();
        return Value(q_ * n);
    }

    friend bool operator==(const Value& a, const Value& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.q_ == b.q_;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    // +infinity compares greater than every finite value.
    friend bool operator<(const Value& a, const Value& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const Value& a, const Value& b) { return b < a; }
    friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
    friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }

    std::string str() const {
        if (inf_) return "inf";
        return q_.get_str();
    }

  private:
    bool inf_;
    Rat q_;
};

inline Value min_value(const Value& a, const Value& b) { return a < b ? a : b; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace maclane

#endif
