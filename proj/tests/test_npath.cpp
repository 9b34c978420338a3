#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maclane/npath.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace maclane;
using maclane::testing::bfs_shortest_npath;
using maclane::testing::Rng;

namespace {
std::vector<Rat> entries(std::initializer_list<std::pair<long, long>> fr) {
    std::vector<Rat> out;
    for (auto [n, d] : fr) out.push_back(make_rat(n, d));
    return out;
}
} // namespace

TEST_CASE("quoted closed-form paths") {
    // 1 > 1/2 > ... > 1/((c-1)/2) > 2/c for odd c >= 3
    for (long c : {3L, 5L, 7L, 11L, 13L}) {
        NPath p = shortest_npath(Rat(1), make_rat(2, c), 1);
        std::vector<Rat> want;
        want.push_back(Rat(1));
        for (long k = 2; k <= (c - 1) / 2; ++k) want.push_back(make_rat(1, k));
        want.push_back(make_rat(2, c));
        if (c == 3) want = entries({{1, 1}, {2, 3}});
        CHECK(p.entries == want);
    }
    // 1 > 1/2 > ... > 1/d
    for (long d : {2L, 5L, 9L}) {
        NPath p = shortest_npath(Rat(1), make_rat(1, d), 1);
        std::vector<Rat> want;
        for (long k = 1; k <= d; ++k) want.push_back(make_rat(1, k));
        CHECK(p.entries == want);
    }
    // running example: 3/8 > 1/3 > 0 and 1 > 1/2 > 2/5 > 3/8
    CHECK(shortest_npath(make_rat(3, 8), Rat(0), 1).entries ==
          entries({{3, 8}, {1, 3}, {0, 1}}));
    CHECK(shortest_npath(Rat(1), make_rat(3, 8), 1).entries ==
          entries({{1, 1}, {1, 2}, {2, 5}, {3, 8}}));
    // 3/c to 0 with c = 2 mod 3 has exactly 3 entries
    for (long c : {5L, 8L, 11L, 14L}) {
        NPath p = shortest_npath(make_rat(3, c), Rat(0), 1);
        REQUIRE(p.entries.size() == 3);
        CHECK(p.entries[1] == make_rat(1, (c + 1) / 3));
    }
}

TEST_CASE("endpoint validation") {
    CHECK_THROWS_AS(shortest_npath(Rat(0), Rat(1), 1), bad_endpoints);
    CHECK_THROWS_AS(shortest_npath(Rat(1), Rat(1), 1), bad_endpoints);
    CHECK_THROWS_AS(shortest_npath(Rat(1), Rat(-1), 1), bad_endpoints);
    CHECK_THROWS_AS(shortest_npath(Rat(1), Rat(0), 0), bad_endpoints);
}

TEST_CASE("oracle equivalence and uniqueness: exhaustive 1-path slice") {
    // all reduced pairs with denominators <= 10 in [0, 2]
    std::vector<Rat> grid;
    for (long d = 1; d <= 10; ++d)
        for (long n = 0; n <= 2 * d; ++n) {
            Rat q = make_rat(n, d);
            if (rat_den(q) == d) grid.push_back(q);
        }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    long checked = 0;
    for (const Rat& a : grid)
        for (const Rat& b : grid) {
            if (!(a > b)) continue;
            NPath p = shortest_npath(a, b, 1);
            for (std::size_t i = 0; i + 1 < p.entries.size(); ++i)
                REQUIRE(is_npath_step(p.entries[i], p.entries[i + 1], 1));
            long cap = 8;
            for (const Rat& e : p.entries)
                cap = std::max(cap, static_cast<long>(mpz_get_si(rat_den(e).get_mpz_t())));
            auto oracle = bfs_shortest_npath(a, b, 1, 2 * cap);
            REQUIRE(oracle.has_value());
            REQUIRE(oracle->count == 1); // unique shortest path
            REQUIRE(p.entries == oracle->path);
            ++checked;
        }
    CHECK(checked > 2000);
}

TEST_CASE("raw N-step oracle agrees with the engine and with scaling") {
    // small slice where the raw N-step breadth-first search is feasible
    std::vector<Rat> grid;
    for (long d = 1; d <= 6; ++d)
        for (long n = 0; n <= d; ++n) {
            Rat q = make_rat(n, d);
            if (rat_den(q) == d) grid.push_back(q);
        }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    long checked = 0;
    for (long N : {2L, 3L, 4L, 6L, 12L}) {
        for (const Rat& a : grid)
            for (const Rat& b : grid) {
                if (!(a > b)) continue;
                if (a - b > make_rat(1, 2)) continue; // keep the search small
                NPath p = shortest_npath(a, b, N);
                long cap = 8;
                for (const Rat& e : p.entries)
                    cap = std::max(cap, static_cast<long>(mpz_get_si(rat_den(e).get_mpz_t())));
                auto oracle = bfs_shortest_npath(a, b, N, cap + 2 * N);
                REQUIRE(oracle.has_value());
                REQUIRE(oracle->count == 1);
                REQUIRE(p.entries == oracle->path);
                ++checked;
            }
    }
    CHECK(checked > 200);
}

TEST_CASE("oracle equivalence on random instances across the full domain") {
    // The oracle explores raw N-path steps; instances are sampled so its
    // denominator cap covers the true path while staying sub-second.
    Rng rng(5522);
    int done = 0;
    int guard = 0;
    while (done < 150 && ++guard < 100000) {
        long N = rng.range(1, 12);
        Rat a = make_rat(rng.range(0, 256), rng.range(1, 64));
        Rat b = make_rat(rng.range(0, 256), rng.range(1, 64));
        if (a > Rat(4) || b > Rat(4) || !(a > b)) continue;
        if (a - b > Rat(1)) continue;
        NPath p = shortest_npath(a, b, N);
        long cap = 8;
        for (const Rat& e : p.entries)
            cap = std::max(cap, static_cast<long>(mpz_get_si(rat_den(e).get_mpz_t())));
        if (cap > 72) continue;
        auto oracle = bfs_shortest_npath(a, b, N, cap + 8);
        REQUIRE(oracle.has_value());
        CHECK(oracle->count == 1);
        CHECK(p.entries == oracle->path);
        ++done;
    }
    CHECK(done == 150);
}

TEST_CASE("scaling law") {
    Rng rng(91);
    for (int i = 0; i < 200; ++i) {
        long N = rng.range(1, 12);
        Rat a = make_rat(rng.range(1, 48), rng.range(1, 12));
        Rat b = make_rat(rng.range(0, 48), rng.range(1, 12));
        if (!(a > b)) continue;
        NPath p = shortest_npath(a, b, N);
        NPath one = shortest_npath(a * N, b * N, 1);
        REQUIRE(p.entries.size() == one.entries.size());
        for (std::size_t k = 0; k < p.entries.size(); ++k) {
            Rat scaled = p.entries[k] * N;
            scaled.canonicalize();
            CHECK(scaled == one.entries[k]);
        }
    }
}

TEST_CASE("mediant insertion") {
    CHECK(mediant_insert(make_rat(1, 2), make_rat(1, 3), 1) == make_rat(2, 5));
    // consecutive integers admit no fractional intermediate
    CHECK_THROWS_AS(mediant_insert(Rat(1), Rat(0), 1), not_applicable);
    CHECK_THROWS_AS(mediant_insert(Rat(3), Rat(2), 1), not_applicable);
    // non-adjacent pairs are rejected
    CHECK_THROWS_AS(mediant_insert(Rat(1), make_rat(1, 3), 1), not_adjacent);
    // the pair (3/8, 1/3) is a valid 1-path step; its unique intermediate is
    // the Farey mediant 4/11
    REQUIRE(is_npath_step(make_rat(3, 8), make_rat(1, 3), 1));
    Rat m = mediant_insert(make_rat(3, 8), make_rat(1, 3), 1);
    CHECK(m == make_rat(4, 11));
    CHECK(is_npath_step(make_rat(3, 8), m, 1));
    CHECK(is_npath_step(m, make_rat(1, 3), 1));
}

TEST_CASE("mediant insertion refines and deletion restores") {
    Rng rng(1009);
    for (int i = 0; i < 300; ++i) {
        long N = rng.range(1, 6);
        Rat a = make_rat(rng.range(1, 30), rng.range(1, 10));
        Rat b = make_rat(rng.range(0, 30), rng.range(1, 10));
        if (!(a > b)) continue;
        NPath p = shortest_npath(a, b, N);
        for (std::size_t k = 0; k + 1 < p.entries.size(); ++k) {
            const Rat &x = p.entries[k], &y = p.entries[k + 1];
            Rat xs = x * N, ys = y * N;
            xs.canonicalize();
            ys.canonicalize();
            if (is_integer(xs) && is_integer(ys)) {
                CHECK_THROWS_AS(mediant_insert(x, y, N), not_applicable);
                continue;
            }
            Rat mid = mediant_insert(x, y, N);
            CHECK(x > mid);
            CHECK(mid > y);
            CHECK(is_npath_step(x, mid, N));
            CHECK(is_npath_step(mid, y, N));
            // deleting the mediant from the refined sequence restores the path
            std::vector<Rat> refined;
            for (std::size_t t = 0; t <= k; ++t) refined.push_back(p.entries[t]);
            refined.push_back(mid);
            for (std::size_t t = k + 1; t < p.entries.size(); ++t) refined.push_back(p.entries[t]);
            refined.erase(refined.begin() + static_cast<long>(k) + 1);
            CHECK(refined == p.entries);
        }
    }
}

TEST_CASE("path length bound checks") {
    // 1-path 1 -> 3/7: at most c - b + 1 = 5 entries; exact count (c+2)/3 = 3
    auto r1 = path_length_bound_checks(shortest_npath(Rat(1), make_rat(3, 7), 1));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].applicable);
    CHECK(r1[0].holds);
    CHECK(r1[0].exact);
    CHECK(r1[0].length == 3);

    // 1-path 1 -> 3/13: exactly (13+2)/3 = 5 entries
    auto r2 = path_length_bound_checks(shortest_npath(Rat(1), make_rat(3, 13), 1));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].exact);
    CHECK(r2[0].length == 5);
    CHECK(r2[0].holds);

    // 3/c -> 0 with c = 2 mod 3: exactly 3 entries
    auto r3 = path_length_bound_checks(shortest_npath(make_rat(3, 8), Rat(0), 1));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].exact);
    CHECK(r3[0].holds);

    // generic bounds hold across a grid
    for (long c = 2; c <= 20; ++c)
        for (long b = 1; b < c; ++b) {
            Rat q = make_rat(b, c);
            if (rat_den(q) != c) continue;
            for (const auto& r : path_length_bound_checks(shortest_npath(Rat(1), q, 1)))
                CHECK(r.holds);
            for (const auto& r : path_length_bound_checks(shortest_npath(q, Rat(0), 1)))
                CHECK(r.holds);
        }
}
