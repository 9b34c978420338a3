#include "maclane/poly.hpp"

#include <algorithm>

#include "maclane/errors.hpp"

namespace maclane {

Poly Poly::monomial(const Rat& a, std::size_t k) {
    if (a == 0) return Poly();
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = a;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
    if (s == 0) return Poly();
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::pow(unsigned long e) const {
    Poly r = Poly::constant(Rat(1));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

void Poly::divmod(const Poly& divisor, Poly& quot, Poly& rem) const {
    if (divisor.is_zero()) throw zero_polynomial();
    std::vector<Rat> r = c_;
    const long db = divisor.degree();
    const Rat inv_lead = 1 / divisor.lead();
    long dr = static_cast<long>(r.size()) - 1;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    std::vector<Rat> q;
    if (dr >= db) q.assign(static_cast<std::size_t>(dr - db) + 1, Rat(0));
    while (dr >= db) {
        const Rat f = r[static_cast<std::size_t>(dr)] * inv_lead;
        q[static_cast<std::size_t>(dr - db)] = f;
        for (long i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(dr - db + i)] -= f * divisor.coeff(static_cast<std::size_t>(i));
        --dr;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    r.resize(static_cast<std::size_t>(dr + 1));
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::mod(const Poly& divisor) const {
    Poly q, r;
    divmod(divisor, q, r);
    return r;
}

bool Poly::divisible_by(const Poly& divisor) const {
    if (divisor.is_zero()) return is_zero();
    return mod(divisor).is_zero();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::shifted(const Rat& a) const {
    // Horner with respect to (x + a).
    Poly r;
    Poly lin({a, Rat(1)});
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + Poly::constant(c_[i]);
    return r;
}

Int Poly::denominator_lcm() const {
    Int l(1);
    for (const auto& x : c_) l = lcm_int(l, rat_den(x));
    return l;
}

bool Poly::is_p_integral(std::uint64_t p) const {
    const Int P(static_cast<unsigned long>(p));
    for (const auto& x : c_) {
        Int d = rat_den(x);
        if (mpz_divisible_p(d.get_mpz_t(), P.get_mpz_t())) return false;
    }
    return true;
}

bool Poly::key_less(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

// Print a coefficient, preferring the r*p^k form when the configured prime
// divides it (so key polynomials read like "x^3 - p").
static std::string coeff_str(const Rat& a, std::uint64_t p_literal) {
    if (p_literal != 0 && is_integer(a) && a != 0) {
        Int n = rat_num(a);
        bool neg = n < 0;
        if (neg) n = -n;
        const Int P(static_cast<unsigned long>(p_literal));
        unsigned long k = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
        if (k > 0 && n < P) {
            std::string s = neg ? "-" : "";
            if (n != 1) s += n.get_str() + "*";
            s += "p";
            if (k > 1) s += "^" + std::to_string(k);
            return s;
        }
    }
    return a.get_str();
}

std::string Poly::str(const std::string& var, std::uint64_t p_literal) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        std::string cs = coeff_str(c_[i], p_literal);
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) out += "-", cs = cs.substr(1);
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(1 / a.lead());
    return a;
}

} // namespace maclane
