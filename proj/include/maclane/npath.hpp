#ifndef MACLANE_NPATH_HPP
#define MACLANE_NPATH_HPP

/* Shortest N-paths: decreasing sequences of reduced rationals whose
 * consecutive entries a > a' satisfy
 *     a - a' = N / (lcm(N, den a) * lcm(N, den a')).
 * They parameterize chains of exceptional components in minimal regular
 * resolutions; inserting the mediant of a consecutive pair is the valuation
 * of the exceptional divisor of the corresponding point blowup. */

#include <vector>

#include "maclane/rat.hpp"

namespace maclane {

struct NPath {
    long N = 1;
    std::vector<Rat> entries; // strictly decreasing, reduced
};

/// Is (a, a') a valid single N-path step?
bool is_npath_step(const Rat& a, const Rat& a_next, long N);

/// The unique shortest N-path from a down to a' (a > a' >= 0, N >= 1).
NPath shortest_npath(const Rat& a, const Rat& a_prime, long N);

/// The unique entry strictly between a consecutive pair of a shortest
/// N-path such that both halves are valid steps (the scaled Farey mediant).
/// Throws not_adjacent if (a, a') is not a valid step, and not_applicable
/// for the integer-integer step, where blowing up stays within integer
/// stage values and no fractional intermediate is inserted.
Rat mediant_insert(const Rat& a, const Rat& a_prime, long N);

struct PathBoundReport {
    bool applicable = false;  // did the path match one of the quoted shapes
    bool holds = true;        // the asserted bound/equality held
    long length = 0;
    long bound = 0;
    bool exact = false;       // the lemma asserts an exact count here
};

/// Checks the quoted length bounds for 1-paths from 1 to b/c and from b/c
/// to 0, including the exact 3/c counts.
std::vector<PathBoundReport> path_length_bound_checks(const NPath& path);

} // namespace maclane

#endif
