#include "farswarm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "farswarm/parallel.hpp"
#include "farswarm/queries.hpp"
#include "farswarm/rng.hpp"

namespace farswarm {

namespace detail {

void compute_targets(const SwarmState& state, StepWorkspace& ws, int workers) {
    const int n = state.count();
    ws.targets.resize(static_cast<std::size_t>(n));
    ws.target_dist_sq.resize(static_cast<std::size_t>(n));
    const std::span<const Vec> pos(state.positions);

    if (state.rule.kind == RuleKind::FarthestPoint) {
        ws.hull = build_hull(pos, state.dim);
        parallel_for(n, workers, [&](int begin, int end) {
            std::vector<int> tied;
            for (int i = begin; i < end; ++i) {
                double best;
                farthest_over(ws.hull.vertices, pos, i, tied, best);
                if (tied.empty()) {  // hull degenerated onto i: everyone ties at 0
                    for (int j = 0; j < n; ++j)
                        if (j != i) tied.push_back(j);
                    best = 0.0;
                }
                if (tied.size() > 1) {
                    std::sort(tied.begin(), tied.end());
                    ws.targets[i] = tied[static_cast<std::size_t>(
                        tie_pick(state.seed, state.t, i, static_cast<int>(tied.size())))];
                } else {
                    ws.targets[i] = tied[0];
                }
                ws.target_dist_sq[i] = best;
            }
        });
        return;
    }

    const double cutoff_sq = state.rule.cutoff * state.rule.cutoff;
    parallel_for(n, workers, [&](int begin, int end) {
        std::vector<int> tied;
        for (int i = begin; i < end; ++i) {
            tied.clear();
            double best = std::numeric_limits<double>::infinity();
            const Vec p = pos[i];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double d2 = dist_sq(p, pos[j]);
                if (d2 <= cutoff_sq) continue;
                if (d2 < best) {
                    best = d2;
                    tied.clear();
                    tied.push_back(j);
                } else if (d2 == best) {
                    tied.push_back(j);
                }
            }
            if (tied.empty()) {
                ws.targets[i] = -1;  // no eligible neighbor: stays put this step
                ws.target_dist_sq[i] = 0.0;
            } else {
                ws.targets[i] = tied.size() > 1
                                    ? tied[static_cast<std::size_t>(tie_pick(
                                          state.seed, state.t, i, static_cast<int>(tied.size())))]
                                    : tied[0];
                ws.target_dist_sq[i] = best;
            }
        }
    });
}

namespace {

void apply_moves(const SwarmState& state, const StepWorkspace& ws, std::vector<Vec>& out) {
    const int n = state.count();
    out.resize(static_cast<std::size_t>(n));
    const double dx = state.step_size;
    const double dx_sq = dx * dx;
    for (int i = 0; i < n; ++i) {
        const int j = ws.targets[i];
        if (j < 0) {
            out[i] = state.positions[i];
            continue;
        }
        const double d2 = ws.target_dist_sq[i];
        if (d2 <= dx_sq) {
            out[i] = state.positions[j];  // land on the target, never overshoot
        } else {
            const double scale = dx / std::sqrt(d2);
            out[i] = state.positions[i] + scale * (state.positions[j] - state.positions[i]);
        }
    }
}

double diameter_sq(const SwarmState& state, const StepWorkspace& ws) {
    if (state.rule.kind == RuleKind::FarthestPoint) {
        // max_i dist(i, farthest(i)) is exactly the set diameter
        double best = 0.0;
        for (const double d2 : ws.target_dist_sq) best = std::max(best, d2);
        return best;
    }
    return extent_sq(state.positions, state.dim);
}

}  // namespace

}  // namespace detail

SwarmState advance(const SwarmState& state, int workers) {
    validate(state);
    detail::StepWorkspace ws;
    detail::compute_targets(state, ws, workers);
    SwarmState next = state;
    detail::apply_moves(state, ws, next.positions);
    ++next.t;
    return next;
}

bool is_assembled(const SwarmState& state) {
    const double width = 2.0 * state.step_size;
    return extent_sq(state.positions, state.dim) <= width * width;
}

RunOutcome run(SwarmState state, std::int64_t max_steps, std::span<const StepObserver> observers,
               int workers) {
    validate(state);
    if (max_steps <= 0) throw std::invalid_argument("max_steps must be > 0");

    for (const auto& obs : observers) obs(state);

    const double width = 2.0 * state.step_size;
    const double width_sq = width * width;
    detail::StepWorkspace ws;
    std::vector<Vec> next_positions;
    std::int64_t steps = 0;
    for (;;) {
        detail::compute_targets(state, ws, workers);
        if (detail::diameter_sq(state, ws) <= width_sq) {
            const std::int64_t assembled_at = state.t;
            return {std::move(state), assembled_at, steps};
        }
        if (steps == max_steps) return {std::move(state), std::nullopt, steps};
        detail::apply_moves(state, ws, next_positions);
        state.positions.swap(next_positions);
        ++state.t;
        ++steps;
        for (const auto& obs : observers) obs(state);
    }
}

}  // namespace farswarm
