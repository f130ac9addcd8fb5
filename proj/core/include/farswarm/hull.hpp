#ifndef FARSWARM_HULL_HPP
#define FARSWARM_HULL_HPP

#include <span>
#include <vector>

#include "farswarm/vec.hpp"

namespace farswarm {

// Convex-hull candidate set for farthest-point queries. Immutable after
// build; queries against it are read-only.
//
// Contents by dimension:
//   1D: the two extreme indices (one if all points coincide).
//   2D: hull vertex indices in CCW order, starting at the lexicographically
//       smallest vertex. Exactly collinear points interior to an edge are
//       excluded; near-collinear points (within the orientation tolerance)
//       are retained so no candidate extreme can be lost to rounding.
//   3D: all indices (brute-force candidate set; 3D runs are rare enough that
//       a true 3D hull is not worth its complexity here).
struct HullIndex {
    std::vector<int> vertices;
    int dim = 2;
};

HullIndex build_hull(std::span<const Vec> positions, int dim);

// max pairwise distance of the point set (diameter); uses the hull in 2D
double extent(std::span<const Vec> positions, int dim);

// squared diameter; predicates compare against squared thresholds so exact
// boundary cases stay exact
double extent_sq(std::span<const Vec> positions, int dim);

}  // namespace farswarm

#endif
