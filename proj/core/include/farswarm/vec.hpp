#ifndef FARSWARM_VEC_HPP
#define FARSWARM_VEC_HPP

#include <cmath>

namespace farswarm {

// Particle position in units of sigma. Coordinates beyond the active
// dimension are kept at exactly 0.0, so all arithmetic is dimension-agnostic.
struct Vec {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec operator*(double s, Vec a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr bool operator==(Vec a, Vec b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

constexpr double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr double dist_sq(Vec a, Vec b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

inline double dist(Vec a, Vec b) { return std::sqrt(dist_sq(a, b)); }

inline double norm(Vec a) { return std::sqrt(dot(a, a)); }

inline bool finite(Vec a) { return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z); }

}  // namespace farswarm

#endif
