#include "maclane/npath.hpp"

#include "maclane/errors.hpp"

namespace maclane {

bool is_npath_step(const Rat& a, const Rat& a_next, long N) {
    if (!(a > a_next)) return false;
    Int n(N);
    Int l1 = lcm_int(n, rat_den(a));
    Int l2 = lcm_int(n, rat_den(a_next));
    return a - a_next == Rat(n) / Rat(l1 * l2);
}

namespace {

// Shortest 1-path step: from x = b/c, the next entry is the largest
// y = b'/c' <= x - 1/(c c') with b c' - b' c = 1 and y >= floor_target.
// Minimal c' in the inverse residue class gives the farthest admissible
// jump; this greedy choice reproduces the unique shortest path (verified
// exhaustively against the breadth-first oracle in the tests).
Rat greedy_step(const Rat& x, const Rat& target) {
    const Int b = rat_num(x), c = rat_den(x);
    Int c0;
    if (c == 1) {
        c0 = 1;
    } else {
        Int binv;
        if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t()) == 0)
            throw engine_error("1-path step: numerator not invertible");
        c0 = binv == 0 ? c : binv; // representative in [1, c]
    }
    for (Int cp = c0;; cp += c) {
        Rat y(b * cp - 1, c * cp);
        y.canonicalize();
        if (y >= target) return y;
    }
}

std::vector<Rat> shortest_1path(const Rat& a, const Rat& a_prime) {
    std::vector<Rat> out{a};
    Rat x = a;
    long guard = 0;
    while (x != a_prime) {
        x = greedy_step(x, a_prime);
        out.push_back(x);
        if (++guard > 1000000) throw engine_error("1-path did not terminate (bug trap)");
    }
    return out;
}

} // namespace

NPath shortest_npath(const Rat& a, const Rat& a_prime, long N) {
    if (N < 1 || !(a > a_prime) || a_prime < 0)
        throw bad_endpoints("need a > a' >= 0 and N >= 1");
    NPath p;
    p.N = N;
    for (const Rat& e : shortest_1path(a * N, a_prime * N)) {
        Rat q = e / N;
        q.canonicalize();
        p.entries.push_back(q);
    }
    return p;
}

Rat mediant_insert(const Rat& a, const Rat& a_prime, long N) {
    if (!is_npath_step(a, a_prime, N))
        throw not_adjacent("(" + a.get_str() + ", " + a_prime.get_str() +
                           ") is not a consecutive N-path pair for N = " + std::to_string(N));
    Rat x = a * N, y = a_prime * N;
    x.canonicalize();
    y.canonicalize();
    if (is_integer(x) && is_integer(y))
        throw not_applicable("no fractional intermediate between consecutive integer entries " +
                             a.get_str() + " > " + a_prime.get_str());
    Rat med(rat_num(x) + rat_num(y), rat_den(x) + rat_den(y));
    med.canonicalize();
    Rat out = med / N;
    out.canonicalize();
    return out;
}

std::vector<PathBoundReport> path_length_bound_checks(const NPath& path) {
    std::vector<PathBoundReport> out;
    if (path.N != 1 || path.entries.size() < 1) return out;
    const Rat& first = path.entries.front();
    const Rat& last = path.entries.back();
    const long len = static_cast<long>(path.entries.size());

    if (first == 1 && last > 0 && last < 1) {
        const Int b = rat_num(last), c = rat_den(last);
        PathBoundReport r;
        r.applicable = true;
        r.length = len;
        r.bound = static_cast<long>(mpz_get_si(Int(c - b + 1).get_mpz_t()));
        r.holds = len <= r.bound;
        // exact (c+2)/3 count for 1 -> 3/c with c = 1 mod 3, c >= 7
        if (b == 3 && c % 3 == 1 && c >= 7) {
            r.exact = true;
            r.bound = static_cast<long>(mpz_get_si(Int((c + 2) / 3).get_mpz_t()));
            r.holds = len == r.bound;
        }
        out.push_back(r);
    }
    if (last == 0 && first > 0) {
        const Int b = rat_num(first), c = rat_den(first);
        PathBoundReport r;
        r.applicable = true;
        r.length = len;
        r.bound = static_cast<long>(mpz_get_si(Int(b + 1).get_mpz_t()));
        r.holds = len <= r.bound;
        if (b == 3 && c % 3 == 2) {
            r.exact = true;
            r.bound = 3;
            r.holds = len == 3;
        }
        out.push_back(r);
    }
    return out;
}

} // namespace maclane
