#include <cmath>

#include "doctest.h"
#include "farswarm/analysis.hpp"
#include "farswarm/dynamics.hpp"
#include "farswarm/ensemble.hpp"

using namespace farswarm;

namespace {

std::vector<std::pair<double, double>> power_points(double amplitude, double exponent) {
    std::vector<std::pair<double, double>> pts;
    for (const double x : {10.0, 50.0, 200.0, 1000.0, 4000.0})
        pts.emplace_back(x, amplitude * std::pow(x, exponent));
    return pts;
}

}  // namespace

TEST_CASE("power-law fit recovers exact laws") {
    SUBCASE("y = 2 x^0.34") {
        const PowerLawFit fit = fit_power_law(power_points(2.0, 0.34));
        CHECK(fit.exponent == doctest::Approx(0.34).epsilon(1e-12));
        CHECK(fit.amplitude == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(fit.exponent_stderr < 1e-10);
        CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("y = x^-0.60") {
        const PowerLawFit fit = fit_power_law(power_points(1.0, -0.60));
        CHECK(fit.exponent == doctest::Approx(-0.60).epsilon(1e-12));
    }
}

TEST_CASE("power-law fit input validation") {
    std::vector<std::pair<double, double>> two{{1.0, 1.0}, {2.0, 2.0}};
    CHECK_THROWS(fit_power_law(two));
    std::vector<std::pair<double, double>> bad{{1.0, 1.0}, {2.0, -2.0}, {3.0, 3.0}};
    CHECK_THROWS(fit_power_law(bad));
    std::vector<std::pair<double, double>> flat{{2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}};
    CHECK_THROWS(fit_power_law(flat));
}

TEST_CASE("power-law fit is scale covariant") {
    // noisy data so the residual-driven stderr is nonzero
    auto pts = power_points(3.0, 0.5);
    const double wiggle[] = {1.04, 0.97, 1.02, 0.95, 1.06};
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].second *= wiggle[i];
    const PowerLawFit base = fit_power_law(pts);
    REQUIRE(base.exponent_stderr > 1e-4);

    std::vector<std::pair<double, double>> scaled;
    for (const auto& [x, y] : pts) scaled.emplace_back(7.5 * x, y);
    const PowerLawFit fit = fit_power_law(scaled);
    CHECK(fit.exponent == doctest::Approx(base.exponent).epsilon(1e-9));
    CHECK(fit.exponent_stderr == doctest::Approx(base.exponent_stderr).epsilon(1e-9));
    CHECK(fit.r_squared == doctest::Approx(base.r_squared).epsilon(1e-9));
}

TEST_CASE("collapse test") {
    const Curve a{{0, 10}, {1, 8}, {2, 5}, {3, 2}};
    SUBCASE("identical curves collapse exactly") {
        const std::vector<Curve> curves{a, a, a};
        CHECK(collapse_test(curves).max_deviation == 0.0);
    }
    SUBCASE("pure scale factors are removed by normalization") {
        Curve b;
        for (const auto& [t, v] : a) b.emplace_back(t, 3.7 * v);
        const std::vector<Curve> curves{a, b};
        CHECK(collapse_test(curves).max_deviation <= 1e-12);
    }
    SUBCASE("interpolation onto the union grid") {
        const Curve c{{0, 10}, {2, 6}, {4, 2}};  // normalized: 1, 0.6, 0.2
        const Curve d{{0, 10}, {4, 2}};          // straight line through the same endpoints
        const std::vector<Curve> coincide{c, d};
        CHECK(collapse_test(coincide).max_deviation <= 1e-15);

        const Curve e{{0, 10}, {4, 6}};  // normalized: 1 .. 0.6
        const std::vector<Curve> differ{c, e};
        // deviations: t=2 -> |0.6 - 0.8| = 0.2, t=4 -> |0.2 - 0.6| = 0.4
        CHECK(collapse_test(differ).max_deviation == doctest::Approx(0.4));
    }
    SUBCASE("disjoint time supports are an error") {
        const Curve late{{10, 5}, {12, 4}};
        const Curve early{{0, 5}, {2, 4}};
        const std::vector<Curve> curves{early, late};
        CHECK_THROWS(collapse_test(curves));
    }
    SUBCASE("fewer than two curves is an error") {
        const std::vector<Curve> curves{a};
        CHECK_THROWS(collapse_test(curves));
    }
}

TEST_CASE("ensemble averages match per-realization runs") {
    EnsembleSpec spec;
    spec.geometry = GeometryKind::Disc;
    spec.size = 6.0;
    spec.densities = {1.0};
    spec.realizations = 2;
    spec.step_size = 0.02;
    spec.max_steps = 5000;
    spec.stride = 10;
    spec.base_seed = 500;
    const EnsembleResult result = run_ensemble(spec, 2);
    REQUIRE(result.per_density.size() == 1);
    const DensityResult& dr = result.per_density[0];

    // recompute the two realizations by hand
    double na0[2];
    for (int r = 0; r < 2; ++r) {
        const InitSpec init = make_init_spec_fixed_size(GeometryKind::Disc, 6.0, 1.0, 500 + r);
        const SwarmState s = generate(init, 0.02, Rule::farthest());
        na0[r] = attractor_report(s).n_a;
    }
    CHECK(dr.na0_mean == 0.5 * (na0[0] + na0[1]));
    CHECK(dr.active.front() == 2);
    CHECK(dr.assembled_count == 2);
    CHECK(dr.grid_t.front() == 0);

    SUBCASE("deterministic across worker counts") {
        const EnsembleResult again = run_ensemble(spec, 1);
        const DensityResult& other = again.per_density[0];
        CHECK(other.na_mean == dr.na_mean);
        CHECK(other.annulus_mean == dr.annulus_mean);
        CHECK(other.assembly_mean == dr.assembly_mean);
    }
}

TEST_CASE("ragged series average over still-active realizations") {
    EnsembleSpec spec;
    spec.geometry = GeometryKind::Disc;
    spec.size = 5.0;
    spec.densities = {1.0, 2.0};
    spec.realizations = 3;
    spec.stride = 25;
    spec.max_steps = 5000;
    spec.base_seed = 7;
    const EnsembleResult result = run_ensemble(spec, 4);
    for (const DensityResult& dr : result.per_density) {
        CHECK(dr.assembled_count == 3);
        // active counts never increase and end above zero
        for (std::size_t k = 1; k < dr.active.size(); ++k) CHECK(dr.active[k] <= dr.active[k - 1]);
        CHECK(dr.active.back() >= 1);
        CHECK(dr.na_mean.front() == dr.na0_mean);
    }
}

TEST_CASE("t0-only sweeps skip evolution and fit the scaling law") {
    EnsembleSpec spec;
    spec.geometry = GeometryKind::Disc;
    spec.size = 12.0;
    spec.densities = {0.3, 1.0, 3.0};
    spec.realizations = 5;
    spec.base_seed = 11;
    spec.evolve = false;
    const EnsembleResult result = run_ensemble(spec, 4);
    for (const DensityResult& dr : result.per_density) {
        CHECK(dr.grid_t.size() == 1);
        CHECK(dr.assembled_count == 0);
        CHECK(std::isfinite(dr.annulus_mean));
    }
    const PowerLawFit fit = attractor_count_scaling(result);
    CHECK(std::isfinite(fit.exponent));
    CHECK(fit.exponent > 0.0);  // more particles, more attractors
    const PowerLawFit width = annulus_width_scaling(result);
    CHECK(width.exponent < 0.0);  // and a thinner rim
}

TEST_CASE("windowed ensemble mean of N_A decays") {
    EnsembleSpec spec;
    spec.geometry = GeometryKind::Disc;
    spec.size = 6.0;
    spec.densities = {1.5};
    spec.realizations = 8;
    spec.stride = 1;
    spec.max_steps = 5000;
    spec.base_seed = 42;
    const EnsembleResult result = run_ensemble(spec, 4);
    const DensityResult& dr = result.per_density[0];
    REQUIRE(dr.na_mean.size() > 120);
    // 50-step moving averages, compared two windows apart to allow noise
    std::vector<double> smooth;
    for (std::size_t k = 0; k + 50 <= dr.na_mean.size(); ++k) {
        double sum = 0.0;
        for (std::size_t j = k; j < k + 50; ++j) sum += dr.na_mean[j];
        smooth.push_back(sum / 50.0);
    }
    for (std::size_t k = 100; k < smooth.size(); k += 50)
        CHECK(smooth[k] <= smooth[k - 100] + 0.5);
}

TEST_CASE("ensemble spec validation") {
    EnsembleSpec spec;
    spec.size = 5.0;
    spec.densities = {1.0};
    spec.realizations = 1;
    CHECK_THROWS(run_ensemble(spec, 1));
    spec.realizations = 2;
    spec.densities = {};
    CHECK_THROWS(run_ensemble(spec, 1));
    spec.densities = {-1.0};
    CHECK_THROWS(run_ensemble(spec, 1));
}
