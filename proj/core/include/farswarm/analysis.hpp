#ifndef FARSWARM_ANALYSIS_HPP
#define FARSWARM_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "farswarm/dynamics.hpp"
#include "farswarm/state.hpp"

namespace farswarm {

// Per-step target structure: who every particle moves toward, the set of
// particles that are anyone's target (attractors), and the follower groups.
// Tie-breaks replay the exact counter-based draws the step itself uses, so a
// report for the state at time t describes the step actually taken from t.
struct AttractorReport {
    std::vector<int> targets;                 // per particle; -1 = stalled
    std::vector<int> attractors;              // sorted, unique
    std::vector<std::vector<int>> followers;  // parallel to attractors
    int n_a = 0;                              // = attractors.size()
};

// Farthest-rule report (N_A and the slice structure).
AttractorReport attractor_report(const SwarmState& state);

// Same grouping for either rule; stats for nearest-rule runs count distinct
// targets of that rule.
AttractorReport target_report(const SwarmState& state);

struct AnnulusWidth {
    double width = 0.0;  // R minus the smallest attractor radius
    double outer_radius = 0.0;
};

// Thinnest annulus of outer radius R (centered at `center`) containing every
// attractor. Throws if an attractor lies outside radius R.
AnnulusWidth annulus_width(const AttractorReport& report, std::span<const Vec> positions,
                           Vec center, double outer_radius);

struct SlicePartition {
    std::vector<int> class_of;    // per particle: index into report.attractors
    std::vector<int> class_size;  // per class
    int n_classes = 0;
};

SlicePartition slice_partition(const AttractorReport& report);

struct BisectorDiagnostic {
    int particle = -1;
    std::pair<int, int> attractor_pair{-1, -1};
    double perp_distance = 0.0;  // distance to the pair's perpendicular bisector
    int side_sign = 1;           // +1: closer to the second of the pair
};

BisectorDiagnostic bisector_diagnostic(std::span<const Vec> positions, int particle,
                                       std::pair<int, int> pair);

// Centroid of the final positions of an assembled run; throws otherwise.
Vec assembly_point(const RunOutcome& outcome);

struct AttractorCount {
    std::int64_t t = 0;
    int n_a = 0;
};

// N_A(t) over a recorded trajectory (farthest rule).
std::vector<AttractorCount> attractor_count_series(std::span<const SwarmState> states);

}  // namespace farswarm

#endif
