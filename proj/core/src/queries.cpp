#include "farswarm/queries.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace farswarm {

namespace detail {

void farthest_over(std::span<const int> candidates, std::span<const Vec> positions, int i,
                   std::vector<int>& tied, double& best_dist_sq) {
    tied.clear();
    double best = -1.0;
    const Vec p = positions[i];
    for (const int j : candidates) {
        if (j == i) continue;
        const double d2 = dist_sq(p, positions[j]);
        if (d2 > best) {
            best = d2;
            tied.clear();
            tied.push_back(j);
        } else if (d2 == best) {
            tied.push_back(j);
        }
    }
    best_dist_sq = best;
}

}  // namespace detail

namespace {

std::vector<int> all_indices(std::size_t n) {
    std::vector<int> idx(n);
    for (std::size_t k = 0; k < n; ++k) idx[k] = static_cast<int>(k);
    return idx;
}

}  // namespace

QueryResult farthest_brute(std::span<const Vec> positions, int i) {
    if (positions.size() < 2) throw std::invalid_argument("farthest query needs at least 2 points");
    QueryResult r;
    const std::vector<int> idx = all_indices(positions.size());
    detail::farthest_over(idx, positions, i, r.tied, r.dist_sq);
    return r;
}

QueryResult farthest_fast(const HullIndex& hull, std::span<const Vec> positions, int i) {
    if (positions.size() < 2) throw std::invalid_argument("farthest query needs at least 2 points");
    QueryResult r;
    detail::farthest_over(hull.vertices, positions, i, r.tied, r.dist_sq);
    if (!r.found()) {
        // hull collapsed onto the query point (all positions coincide): every
        // other particle ties at distance 0
        const std::vector<int> idx = all_indices(positions.size());
        detail::farthest_over(idx, positions, i, r.tied, r.dist_sq);
        return r;
    }
    std::sort(r.tied.begin(), r.tied.end());
    return r;
}

QueryResult nearest_eligible(std::span<const Vec> positions, int i, double cutoff) {
    if (positions.size() < 2) throw std::invalid_argument("nearest query needs at least 2 points");
    if (!(cutoff > 0.0)) throw std::invalid_argument("cutoff must be > 0");
    QueryResult r;
    const double cutoff_sq = cutoff * cutoff;
    double best = std::numeric_limits<double>::infinity();
    const Vec p = positions[i];
    const int n = static_cast<int>(positions.size());
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double d2 = dist_sq(p, positions[j]);
        if (d2 <= cutoff_sq) continue;  // stopped sensing each other
        if (d2 < best) {
            best = d2;
            r.tied.clear();
            r.tied.push_back(j);
        } else if (d2 == best) {
            r.tied.push_back(j);
        }
    }
    r.dist_sq = r.found() ? best : 0.0;
    return r;
}

}  // namespace farswarm
