#ifndef FARSWARM_STATE_HPP
#define FARSWARM_STATE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "farswarm/vec.hpp"

namespace farswarm {

enum class RuleKind {
    FarthestPoint,      // move toward the farthest particle
    NearestWithCutoff,  // move toward the nearest particle beyond a cutoff
};

struct Rule {
    RuleKind kind = RuleKind::FarthestPoint;
    double cutoff = 0.0;  // only meaningful for NearestWithCutoff

    static Rule farthest() { return {RuleKind::FarthestPoint, 0.0}; }
    static Rule nearest(double cutoff) { return {RuleKind::NearestWithCutoff, cutoff}; }
};

// Full swarm configuration at one discrete timestep. The seed doubles as the
// RNG state: tie-break draws are counter-based (see rng.hpp), so no mutable
// generator state needs to travel with the positions.
struct SwarmState {
    std::vector<Vec> positions;
    int dim = 2;  // 1, 2 or 3; coordinates beyond dim are exactly 0
    std::int64_t t = 0;
    double step_size = 0.02;  // displacement per step, units of sigma
    Rule rule = Rule::farthest();
    std::uint64_t seed = 0;

    int count() const { return static_cast<int>(positions.size()); }
};

inline void validate(const SwarmState& state) {
    if (state.positions.size() < 2) throw std::invalid_argument("swarm needs at least 2 particles");
    if (state.dim < 1 || state.dim > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
    if (!(state.step_size > 0.0)) throw std::invalid_argument("step_size must be > 0");
    if (state.t < 0) throw std::invalid_argument("timestep must be non-negative");
    if (state.rule.kind == RuleKind::NearestWithCutoff && !(state.rule.cutoff > 0.0))
        throw std::invalid_argument("cutoff must be > 0");
    for (const Vec& p : state.positions) {
        if (!finite(p)) throw std::invalid_argument("positions must be finite");
        if ((state.dim < 2 && p.y != 0.0) || (state.dim < 3 && p.z != 0.0))
            throw std::invalid_argument("coordinates beyond the active dimension must be 0");
    }
}

}  // namespace farswarm

#endif
