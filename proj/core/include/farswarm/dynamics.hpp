#ifndef FARSWARM_DYNAMICS_HPP
#define FARSWARM_DYNAMICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "farswarm/hull.hpp"
#include "farswarm/state.hpp"

namespace farswarm {

// Called with the initial state and again after every step.
using StepObserver = std::function<void(const SwarmState&)>;

struct RunOutcome {
    SwarmState final_state;
    std::optional<std::int64_t> assembly_time;  // first t at which is_assembled held
    std::int64_t steps_taken = 0;

    bool assembled() const { return assembly_time.has_value(); }
};

// One synchronous timestep: every particle's target is chosen from the
// time-t positions, then all particles move step_size toward their targets
// (onto the target's old position when closer than step_size). Distance ties
// are broken uniformly via the counter-based draw in rng.hpp. Under the
// nearest rule a particle with no eligible neighbor stays put.
SwarmState advance(const SwarmState& state, int workers = 1);

// True iff the maximum pairwise distance is <= 2 * step_size (diameter of
// the enclosing ball, boundary inclusive).
bool is_assembled(const SwarmState& state);

// Steps until assembly or max_steps advances, whichever comes first.
RunOutcome run(SwarmState state, std::int64_t max_steps,
               std::span<const StepObserver> observers = {}, int workers = 1);

namespace detail {

// Scratch reused across steps; targets/target_dist_sq are indexed by particle
// (-1 target = stalled).
struct StepWorkspace {
    HullIndex hull;
    std::vector<int> targets;
    std::vector<double> target_dist_sq;
};

// Pure function of the time-t positions; parallel over particles.
void compute_targets(const SwarmState& state, StepWorkspace& ws, int workers);

}  // namespace detail

}  // namespace farswarm

#endif
