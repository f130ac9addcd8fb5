#ifndef FARSWARM_ENSEMBLE_HPP
#define FARSWARM_ENSEMBLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "farswarm/init.hpp"
#include "farswarm/state.hpp"

namespace farswarm {

// Seeded sweep over densities at a fixed region size. Realization r of every
// density uses seed base_seed + r, so densities are seed-matched.
struct EnsembleSpec {
    GeometryKind geometry = GeometryKind::Disc;
    double size = 0.0;  // shared region size (R for disc-like)
    std::vector<double> densities;
    int realizations = 2;
    double step_size = 0.02;
    Rule rule = Rule::farthest();
    std::int64_t max_steps = 100000;
    std::int64_t stride = 1;
    std::uint64_t base_seed = 0;
    bool evolve = true;  // false: t=0 observables only (no time evolution)
};

// Averages for one density. Time series live on the grid t = k * stride;
// entries average the realizations still running at that t (`active` is the
// divisor), so tails are not biased by early assemblies.
struct DensityResult {
    double density = 0.0;
    int n = 0;
    int realizations = 0;

    std::vector<std::int64_t> grid_t;
    std::vector<double> na_mean;
    std::vector<double> na_stderr;
    std::vector<int> active;

    double na0_mean = 0.0;
    double na0_stderr = 0.0;
    double annulus_mean = 0.0;  // NaN for geometries without a defined annulus
    double annulus_stderr = 0.0;
    double assembly_mean = 0.0;  // over assembled realizations only
    double assembly_stderr = 0.0;
    int assembled_count = 0;

    // (t, <N_A(t)>) pairs for the collapse diagnostic
    std::vector<std::pair<double, double>> curve() const;
};

struct EnsembleResult {
    EnsembleSpec spec;
    std::vector<DensityResult> per_density;
};

void validate(const EnsembleSpec& spec);

EnsembleResult run_ensemble(const EnsembleSpec& spec, int workers = 1);

struct PowerLawFit {
    double exponent = 0.0;
    double amplitude = 0.0;
    double exponent_stderr = 0.0;
    double r_squared = 0.0;
};

// OLS on (ln x, ln y); needs >= 3 strictly positive points.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

// <N_A(0)> vs N across the sweep's densities.
PowerLawFit attractor_count_scaling(const EnsembleResult& result);

// <annulus width> vs N across the sweep's densities.
PowerLawFit annulus_width_scaling(const EnsembleResult& result);

using Curve = std::vector<std::pair<double, double>>;

struct CollapseResult {
    std::vector<Curve> normalized;  // each rescaled so f(0) = 1
    double max_deviation = 0.0;     // max over the shared grid of pairwise |f_i - f_j|
};

// Tests whether the curves fall on one universal shape after normalizing by
// their t=0 value; curves are compared on the common time support with
// linear interpolation onto the union grid.
CollapseResult collapse_test(std::span<const Curve> curves);

}  // namespace farswarm

#endif
