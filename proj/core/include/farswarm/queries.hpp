#ifndef FARSWARM_QUERIES_HPP
#define FARSWARM_QUERIES_HPP

#include <span>
#include <vector>

#include "farswarm/hull.hpp"
#include "farswarm/vec.hpp"

namespace farswarm {

// Result of a farthest / nearest-eligible query. `tied` holds every index
// achieving the optimal distance under exact double comparison, sorted
// ascending; the caller tie-breaks. Empty means no eligible candidate
// (possible only for nearest_eligible).
struct QueryResult {
    std::vector<int> tied;
    double dist_sq = 0.0;

    bool found() const { return !tied.empty(); }
    int index() const { return tied.front(); }
};

// O(N) scan over all particles; the oracle the fast path is tested against.
QueryResult farthest_brute(std::span<const Vec> positions, int i);

// Scans only hull vertices: O(h) per query. Same returned distance as
// farthest_brute for every input (the farthest point from anywhere is a hull
// vertex).
QueryResult farthest_fast(const HullIndex& hull, std::span<const Vec> positions, int i);

// Nearest j != i with dist(i, j) > cutoff (strict); not found when every
// other particle is inside the cutoff.
QueryResult nearest_eligible(std::span<const Vec> positions, int i, double cutoff);

namespace detail {
// Allocation-free core used by the stepping hot loop: fills `tied` (reused
// scratch) with the argmax set over the candidate list, skipping `i`.
void farthest_over(std::span<const int> candidates, std::span<const Vec> positions, int i,
                   std::vector<int>& tied, double& best_dist_sq);
}  // namespace detail

}  // namespace farswarm

#endif
