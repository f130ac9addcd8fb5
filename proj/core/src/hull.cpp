#include "farswarm/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace farswarm {

namespace {

double cross(Vec o, Vec a, Vec b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

HullIndex hull_1d(std::span<const Vec> positions) {
    int lo = 0, hi = 0;
    const int n = static_cast<int>(positions.size());
    for (int i = 1; i < n; ++i) {
        if (positions[i].x < positions[lo].x) lo = i;
        if (positions[i].x > positions[hi].x) hi = i;
    }
    HullIndex hull;
    hull.dim = 1;
    hull.vertices.push_back(lo);
    if (hi != lo) hull.vertices.push_back(hi);
    return hull;
}

// Andrew's monotone chain. Pops use a scaled tolerance: a point is removed
// only when it is decisively clockwise, so near-collinear candidates survive
// construction and farthest queries stay exact. Exactly collinear vertices
// (cross == 0) are stripped afterwards.
HullIndex hull_2d(std::span<const Vec> positions) {
    const int n = static_cast<int>(positions.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (positions[a].x != positions[b].x) return positions[a].x < positions[b].x;
        return positions[a].y < positions[b].y;
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](int a, int b) { return positions[a] == positions[b]; }),
                order.end());

    HullIndex hull;
    hull.dim = 2;
    if (order.size() <= 2) {
        hull.vertices = std::move(order);
        return hull;
    }

    double max_abs = 0.0;
    for (const Vec& p : positions) max_abs = std::max({max_abs, std::fabs(p.x), std::fabs(p.y)});
    const double tol = 32.0 * std::numeric_limits<double>::epsilon() * max_abs * max_abs;

    std::vector<int>& h = hull.vertices;
    h.reserve(order.size() + 1);
    auto chain = [&](auto begin, auto end, std::size_t base) {
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= base + 2 &&
                   cross(positions[h[h.size() - 2]], positions[h.back()], positions[*it]) < -tol)
                h.pop_back();
            h.push_back(*it);
        }
        h.pop_back();  // endpoint re-added by the next chain / wrap-around
    };
    chain(order.begin(), order.end(), 0);
    const std::size_t lower = h.size();
    chain(order.rbegin(), order.rend(), lower);

    // strip exactly collinear vertices strictly inside an edge (they can
    // never be a farthest point); the between-test keeps chain endpoints
    // intact when the whole input is collinear
    bool removed = true;
    while (removed && h.size() > 2) {
        removed = false;
        for (std::size_t k = 0; k < h.size(); ++k) {
            const Vec prev = positions[h[(k + h.size() - 1) % h.size()]];
            const Vec next = positions[h[(k + 1) % h.size()]];
            const Vec mid = positions[h[k]];
            if (cross(prev, mid, next) != 0.0) continue;
            const double along = dot(mid - prev, next - prev);
            if (along > 0.0 && along < dot(next - prev, next - prev)) {
                h.erase(h.begin() + static_cast<std::ptrdiff_t>(k));
                removed = true;
                break;
            }
        }
    }
    return hull;
}

HullIndex hull_3d(std::span<const Vec> positions) {
    HullIndex hull;
    hull.dim = 3;
    hull.vertices.resize(positions.size());
    std::iota(hull.vertices.begin(), hull.vertices.end(), 0);
    return hull;
}

}  // namespace

HullIndex build_hull(std::span<const Vec> positions, int dim) {
    if (positions.size() < 2) throw std::invalid_argument("build_hull needs at least 2 points");
    switch (dim) {
        case 1: return hull_1d(positions);
        case 2: return hull_2d(positions);
        case 3: return hull_3d(positions);
        default: throw std::invalid_argument("dimension must be 1, 2 or 3");
    }
}

double extent_sq(std::span<const Vec> positions, int dim) {
    if (positions.size() < 2) return 0.0;
    // the two endpoints of a diameter are always hull vertices
    const HullIndex hull = build_hull(positions, dim);
    double best = 0.0;
    for (std::size_t a = 0; a + 1 < hull.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < hull.vertices.size(); ++b)
            best = std::max(best, dist_sq(positions[hull.vertices[a]], positions[hull.vertices[b]]));
    return best;
}

double extent(std::span<const Vec> positions, int dim) {
    return std::sqrt(extent_sq(positions, dim));
}

}  // namespace farswarm
