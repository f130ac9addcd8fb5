#include "farswarm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace farswarm {

namespace {

AttractorReport report_from_targets(std::vector<int> targets) {
    AttractorReport report;
    report.targets = std::move(targets);
    std::vector<int> sorted;
    sorted.reserve(report.targets.size());
    for (const int j : report.targets)
        if (j >= 0) sorted.push_back(j);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    report.attractors = std::move(sorted);
    report.n_a = static_cast<int>(report.attractors.size());

    report.followers.resize(report.attractors.size());
    for (std::size_t i = 0; i < report.targets.size(); ++i) {
        const int j = report.targets[i];
        if (j < 0) continue;
        const auto it = std::lower_bound(report.attractors.begin(), report.attractors.end(), j);
        report.followers[static_cast<std::size_t>(it - report.attractors.begin())].push_back(
            static_cast<int>(i));
    }
    return report;
}

}  // namespace

AttractorReport target_report(const SwarmState& state) {
    validate(state);
    detail::StepWorkspace ws;
    detail::compute_targets(state, ws, 1);
    return report_from_targets(std::move(ws.targets));
}

AttractorReport attractor_report(const SwarmState& state) {
    if (state.rule.kind != RuleKind::FarthestPoint)
        throw std::invalid_argument("attractor_report requires the farthest-point rule");
    return target_report(state);
}

AnnulusWidth annulus_width(const AttractorReport& report, std::span<const Vec> positions,
                           Vec center, double outer_radius) {
    if (report.attractors.empty()) throw std::invalid_argument("report has no attractors");
    if (!(outer_radius > 0.0)) throw std::invalid_argument("outer radius must be > 0");
    double min_r_sq = std::numeric_limits<double>::infinity();
    for (const int a : report.attractors) {
        const double r_sq = dist_sq(positions[static_cast<std::size_t>(a)], center);
        // tiny relative slack absorbs rounding in |position| for points
        // generated exactly on the rim
        if (r_sq > outer_radius * outer_radius * (1.0 + 1e-9))
            throw std::invalid_argument("attractor lies outside the given outer radius");
        min_r_sq = std::min(min_r_sq, r_sq);
    }
    AnnulusWidth result;
    result.outer_radius = outer_radius;
    result.width = std::max(0.0, outer_radius - std::sqrt(min_r_sq));
    return result;
}

SlicePartition slice_partition(const AttractorReport& report) {
    SlicePartition part;
    part.n_classes = report.n_a;
    part.class_size.assign(static_cast<std::size_t>(report.n_a), 0);
    part.class_of.assign(report.targets.size(), -1);
    for (std::size_t i = 0; i < report.targets.size(); ++i) {
        const int j = report.targets[i];
        if (j < 0) continue;
        const auto it = std::lower_bound(report.attractors.begin(), report.attractors.end(), j);
        const int cls = static_cast<int>(it - report.attractors.begin());
        part.class_of[i] = cls;
        ++part.class_size[static_cast<std::size_t>(cls)];
    }
    return part;
}

BisectorDiagnostic bisector_diagnostic(std::span<const Vec> positions, int particle,
                                       std::pair<int, int> pair) {
    if (pair.first == pair.second) throw std::invalid_argument("attractor pair must be distinct");
    const Vec a = positions[static_cast<std::size_t>(pair.first)];
    const Vec b = positions[static_cast<std::size_t>(pair.second)];
    const double sep = dist(a, b);
    if (sep == 0.0) throw std::invalid_argument("attractor pair is coincident, bisector undefined");
    const Vec p = positions[static_cast<std::size_t>(particle)];
    const Vec mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y), 0.5 * (a.z + b.z)};
    const double along = dot(p - mid, {(b.x - a.x) / sep, (b.y - a.y) / sep, (b.z - a.z) / sep});
    BisectorDiagnostic diag;
    diag.particle = particle;
    diag.attractor_pair = pair;
    diag.perp_distance = std::fabs(along);
    diag.side_sign = along >= 0.0 ? 1 : -1;
    return diag;
}

Vec assembly_point(const RunOutcome& outcome) {
    if (!outcome.assembled()) throw std::invalid_argument("run did not assemble");
    const auto& pts = outcome.final_state.positions;
    Vec sum;
    for (const Vec& p : pts) sum = sum + p;
    const double inv = 1.0 / static_cast<double>(pts.size());
    return inv * sum;
}

std::vector<AttractorCount> attractor_count_series(std::span<const SwarmState> states) {
    std::vector<AttractorCount> series;
    series.reserve(states.size());
    for (const SwarmState& s : states)
        series.push_back({s.t, attractor_report(s).n_a});
    return series;
}

}  // namespace farswarm
