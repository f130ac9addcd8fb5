#include "farswarm/init.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "farswarm/rng.hpp"

namespace farswarm {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

int dimension_of(GeometryKind geometry) {
    switch (geometry) {
        case GeometryKind::Segment: return 1;
        case GeometryKind::Ball3D: return 3;
        default: return 2;
    }
}

double region_measure(GeometryKind geometry, double size) {
    switch (geometry) {
        case GeometryKind::Disc:
        case GeometryKind::LatticeInDisc:
        case GeometryKind::RadialOneOverR: return pi * size * size;
        case GeometryKind::SemiDisc: return 0.5 * pi * size * size;
        case GeometryKind::Square: return size * size;
        case GeometryKind::Segment: return 2.0 * size;
        case GeometryKind::Ball3D: return 4.0 / 3.0 * pi * size * size * size;
    }
    throw std::invalid_argument("unknown geometry");
}

InitSpec make_init_spec(GeometryKind geometry, int n, double density, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (!(density > 0.0)) throw std::invalid_argument("density must be > 0");
    InitSpec spec;
    spec.geometry = geometry;
    spec.n = n;
    spec.density = density;
    spec.seed = seed;
    const double measure = static_cast<double>(n) / density;
    switch (geometry) {
        case GeometryKind::Disc:
        case GeometryKind::LatticeInDisc:
        case GeometryKind::RadialOneOverR: spec.size = std::sqrt(measure / pi); break;
        case GeometryKind::SemiDisc: spec.size = std::sqrt(2.0 * measure / pi); break;
        case GeometryKind::Square: spec.size = std::sqrt(measure); break;
        case GeometryKind::Segment: spec.size = 0.5 * measure; break;
        case GeometryKind::Ball3D: spec.size = std::cbrt(measure * 3.0 / (4.0 * pi)); break;
    }
    if (geometry == GeometryKind::LatticeInDisc) spec.spacing = 1.0 / std::sqrt(density);
    return spec;
}

InitSpec make_init_spec_fixed_size(GeometryKind geometry, double size, double density,
                                   std::uint64_t seed) {
    if (!(size > 0.0)) throw std::invalid_argument("size must be > 0");
    if (!(density > 0.0)) throw std::invalid_argument("density must be > 0");
    InitSpec spec;
    spec.geometry = geometry;
    spec.size = size;
    spec.density = density;
    spec.seed = seed;
    spec.n = static_cast<int>(std::llround(density * region_measure(geometry, size)));
    if (spec.n < 2) throw std::invalid_argument("size and density admit fewer than 2 particles");
    if (geometry == GeometryKind::LatticeInDisc) spec.spacing = 1.0 / std::sqrt(density);
    return spec;
}

void validate(const InitSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("n must be >= 2");
    if (!(spec.density > 0.0)) throw std::invalid_argument("density must be > 0");
    if (!(spec.size > 0.0)) throw std::invalid_argument("size must be > 0");
    if (spec.geometry == GeometryKind::LatticeInDisc && !(spec.spacing > 0.0))
        throw std::invalid_argument("spacing must be > 0");
}

SwarmState generate(const InitSpec& spec, double step_size, Rule rule) {
    validate(spec);
    SwarmState state;
    state.dim = dimension_of(spec.geometry);
    state.t = 0;
    state.step_size = step_size;
    state.rule = rule;
    state.seed = spec.seed;

    Rng rng(spec.seed);
    const double radius = spec.size;
    auto& pts = state.positions;

    switch (spec.geometry) {
        case GeometryKind::Disc:
            pts.reserve(static_cast<std::size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i) {
                const double r = radius * std::sqrt(rng.uniform());  // area-exact
                const double theta = 2.0 * pi * rng.uniform();
                pts.push_back({r * std::cos(theta), r * std::sin(theta), 0.0});
            }
            break;
        case GeometryKind::SemiDisc:
            // upper half (y >= 0) of a disc centered at the origin
            pts.reserve(static_cast<std::size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i) {
                const double r = radius * std::sqrt(rng.uniform());
                const double theta = pi * rng.uniform();
                pts.push_back({r * std::cos(theta), r * std::sin(theta), 0.0});
            }
            break;
        case GeometryKind::Square:
            pts.reserve(static_cast<std::size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i) {
                const double x = (rng.uniform() - 0.5) * spec.size;
                const double y = (rng.uniform() - 0.5) * spec.size;
                pts.push_back({x, y, 0.0});
            }
            break;
        case GeometryKind::Segment:
            pts.reserve(static_cast<std::size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i)
                pts.push_back({rng.uniform(-spec.size, spec.size), 0.0, 0.0});
            break;
        case GeometryKind::Ball3D:
            // rejection from the cube: exact and free of direction bias
            pts.reserve(static_cast<std::size_t>(spec.n));
            while (static_cast<int>(pts.size()) < spec.n) {
                const double x = rng.uniform(-1.0, 1.0);
                const double y = rng.uniform(-1.0, 1.0);
                const double z = rng.uniform(-1.0, 1.0);
                if (x * x + y * y + z * z <= 1.0)
                    pts.push_back({radius * x, radius * y, radius * z});
            }
            break;
        case GeometryKind::LatticeInDisc: {
            const double s = spec.spacing;
            const int span = static_cast<int>(std::floor(radius / s));
            const double r_sq = radius * radius;
            for (int j = -span; j <= span; ++j)
                for (int i = -span; i <= span; ++i) {
                    const double x = i * s;
                    const double y = j * s;
                    if (x * x + y * y <= r_sq) pts.push_back({x, y, 0.0});
                }
            if (pts.size() < 2)
                throw std::invalid_argument("lattice spacing admits fewer than 2 sites");
            break;
        }
        case GeometryKind::RadialOneOverR:
            // radius uniform on [0, R): areal density falls off as 1/r
            pts.reserve(static_cast<std::size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i) {
                const double r = radius * rng.uniform();
                const double theta = 2.0 * pi * rng.uniform();
                pts.push_back({r * std::cos(theta), r * std::sin(theta), 0.0});
            }
            break;
    }
    validate(state);
    return state;
}

}  // namespace farswarm
