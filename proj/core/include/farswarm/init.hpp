#ifndef FARSWARM_INIT_HPP
#define FARSWARM_INIT_HPP

#include <cstdint>

#include "farswarm/state.hpp"

namespace farswarm {

enum class GeometryKind {
    Disc,            // uniform in a disc of radius R (2D)
    Square,          // uniform in an axis-aligned square, side `size` (2D)
    SemiDisc,        // uniform in the upper half (y >= 0) of a disc (2D)
    Segment,         // uniform on [-L, L] (1D), size = half-length L
    Ball3D,          // uniform in a ball of radius R (3D)
    LatticeInDisc,   // square-lattice sites inside a disc (2D, deterministic)
    RadialOneOverR,  // areal density ~ 1/r over a disc (2D)
};

// Geometry, population and seed of a t=0 configuration. `size` is the radius
// for disc-like geometries, the full side for Square, and the half-length for
// Segment. n and density are tied to size by the per-geometry measure; the
// factory functions below derive whichever one is left free.
struct InitSpec {
    GeometryKind geometry = GeometryKind::Disc;
    int n = 0;
    double density = 0.0;
    double size = 0.0;
    double spacing = 1.0;  // LatticeInDisc only
    std::uint64_t seed = 0;
};

int dimension_of(GeometryKind geometry);

// Lebesgue measure (length / area / volume) of the region with the given size.
double region_measure(GeometryKind geometry, double size);

// size derived from (n, density)
InitSpec make_init_spec(GeometryKind geometry, int n, double density, std::uint64_t seed);

// n derived from (size, density); used by fixed-radius ensembles
InitSpec make_init_spec_fixed_size(GeometryKind geometry, double size, double density,
                                   std::uint64_t seed);

void validate(const InitSpec& spec);

// Seeded t=0 configuration. Random geometries place n i.i.d. points in the
// closed region; LatticeInDisc enumerates every lattice site inside the disc
// (its particle count is set by the geometry, not by n).
SwarmState generate(const InitSpec& spec, double step_size, Rule rule);

}  // namespace farswarm

#endif
