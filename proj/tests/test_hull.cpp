#include <algorithm>
#include <set>

#include "doctest.h"
#include "farswarm/hull.hpp"
#include "test_support.hpp"

using namespace farswarm;

namespace {

double cross(Vec o, Vec a, Vec b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// every point weakly inside the CCW polygon, up to a scaled tolerance
void check_containment(const HullIndex& hull, const std::vector<Vec>& pts) {
    REQUIRE(hull.vertices.size() >= 1);
    if (hull.dim != 2 || hull.vertices.size() < 3) return;
    double scale = 1.0;
    for (const Vec& p : pts) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
    const double tol = 1e-9 * scale * scale;
    for (const Vec& p : pts) {
        for (std::size_t k = 0; k < hull.vertices.size(); ++k) {
            const Vec a = pts[static_cast<std::size_t>(hull.vertices[k])];
            const Vec b = pts[static_cast<std::size_t>(hull.vertices[(k + 1) % hull.vertices.size()])];
            CHECK(cross(a, b, p) >= -tol);
        }
    }
}

}  // namespace

TEST_CASE("hull of triangle plus interior point") {
    const std::vector<Vec> pts{{0, 0, 0}, {4, 0, 0}, {0, 3, 0}, {1, 1, 0}};
    const HullIndex hull = build_hull(pts, 2);
    // CCW from the lexicographically smallest vertex; (1,1) is interior
    CHECK(hull.vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("hull of unit square corners plus center") {
    const std::vector<Vec> pts{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0.5, 0.5, 0}};
    const HullIndex hull = build_hull(pts, 2);
    CHECK(std::set<int>(hull.vertices.begin(), hull.vertices.end()) == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("hull with exactly collinear edge midpoint excludes it") {
    const std::vector<Vec> pts{{0, 0, 0}, {2, 0, 0}, {1, 0, 0}, {2, 2, 0}, {0, 2, 0}};
    const HullIndex hull = build_hull(pts, 2);
    CHECK(std::set<int>(hull.vertices.begin(), hull.vertices.end()) == std::set<int>{0, 1, 3, 4});
}

TEST_CASE("degenerate hulls") {
    SUBCASE("all points identical") {
        const std::vector<Vec> pts(7, Vec{2, 3, 0});
        CHECK(build_hull(pts, 2).vertices.size() == 1);
    }
    SUBCASE("all collinear falls back to the two extremes") {
        const std::vector<Vec> pts{{0, 0, 0}, {1, 1, 0}, {3, 3, 0}, {2, 2, 0}};
        const HullIndex hull = build_hull(pts, 2);
        CHECK(std::set<int>(hull.vertices.begin(), hull.vertices.end()) == std::set<int>{0, 2});
    }
    SUBCASE("1D extremes") {
        const std::vector<Vec> pts{{3, 0, 0}, {-1, 0, 0}, {7, 0, 0}, {2, 0, 0}};
        const HullIndex hull = build_hull(pts, 1);
        CHECK(std::set<int>(hull.vertices.begin(), hull.vertices.end()) == std::set<int>{1, 2});
    }
    SUBCASE("two points") {
        const std::vector<Vec> pts{{0, 0, 0}, {1, 2, 0}};
        CHECK(build_hull(pts, 2).vertices.size() == 2);
    }
}

TEST_CASE("hull containment and idempotence on random and structured clouds") {
    Rng rng(2024);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 3 + static_cast<int>(rng.uniform(0.0, 200.0));
        std::vector<Vec> pts;
        if (rep % 5 < 3) {
            pts = testing::random_cloud(rng, n, 2);
        } else {
            pts = testing::structured_cloud(rng, n, 2, rep % 4);
        }
        const HullIndex hull = build_hull(pts, 2);
        check_containment(hull, pts);

        // hull of hull vertices spans the same polygon
        std::vector<Vec> verts;
        for (const int v : hull.vertices) verts.push_back(pts[static_cast<std::size_t>(v)]);
        if (verts.size() >= 2) {
            const HullIndex again = build_hull(verts, 2);
            CHECK(again.vertices.size() == verts.size());
        }
    }
}

TEST_CASE("extent equals brute-force max pairwise distance") {
    Rng rng(55);
    for (int rep = 0; rep < 30; ++rep) {
        const int dim = 1 + rep % 3;
        const int n = 2 + static_cast<int>(rng.uniform(0.0, 60.0));
        const std::vector<Vec> pts = testing::random_cloud(rng, n, dim);
        double best = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) best = std::max(best, dist_sq(pts[a], pts[b]));
        CHECK(extent_sq(pts, dim) == best);
    }
}
