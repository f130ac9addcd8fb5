#include "farswarm/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "farswarm/analysis.hpp"
#include "farswarm/dynamics.hpp"

namespace farswarm {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

bool has_annulus(GeometryKind geometry) {
    return geometry == GeometryKind::Disc || geometry == GeometryKind::LatticeInDisc ||
           geometry == GeometryKind::RadialOneOverR;
}

struct RealizationRecord {
    std::vector<int> na;  // at t = 0, stride, 2*stride, ...
    double annulus = nan_value;
    std::optional<std::int64_t> assembly;
};

struct MeanStderr {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    int count = 0;
};

template <typename Range>
MeanStderr mean_stderr(const Range& values) {
    MeanStderr ms;
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
        ++ms.count;
    }
    if (ms.count == 0) return ms;
    ms.mean = sum / ms.count;
    if (ms.count < 2) return ms;
    double ss = 0.0;
    for (const double v : values) ss += (v - ms.mean) * (v - ms.mean);
    ms.stderr_of_mean = std::sqrt(ss / (ms.count - 1)) / std::sqrt(static_cast<double>(ms.count));
    return ms;
}

RealizationRecord run_realization(const EnsembleSpec& spec, double density, std::uint64_t seed) {
    const InitSpec init = make_init_spec_fixed_size(spec.geometry, spec.size, density, seed);
    SwarmState state = generate(init, spec.step_size, spec.rule);

    RealizationRecord rec;
    if (has_annulus(spec.geometry)) {
        const AttractorReport report0 = attractor_report(state);
        rec.annulus = annulus_width(report0, state.positions, Vec{}, init.size).width;
        rec.na.push_back(report0.n_a);
    } else {
        rec.na.push_back(attractor_report(state).n_a);
    }
    if (!spec.evolve) return rec;

    const std::int64_t stride = spec.stride;
    const StepObserver recorder = [&](const SwarmState& s) {
        if (s.t > 0 && s.t % stride == 0) rec.na.push_back(attractor_report(s).n_a);
    };
    const RunOutcome outcome = run(std::move(state), spec.max_steps, {&recorder, 1}, 1);
    rec.assembly = outcome.assembly_time;
    return rec;
}

}  // namespace

std::vector<std::pair<double, double>> DensityResult::curve() const {
    std::vector<std::pair<double, double>> c;
    c.reserve(grid_t.size());
    for (std::size_t k = 0; k < grid_t.size(); ++k)
        c.emplace_back(static_cast<double>(grid_t[k]), na_mean[k]);
    return c;
}

void validate(const EnsembleSpec& spec) {
    if (spec.realizations < 2) throw std::invalid_argument("realization count must be >= 2");
    if (spec.densities.empty()) throw std::invalid_argument("density list must be non-empty");
    for (const double d : spec.densities)
        if (!(d > 0.0)) throw std::invalid_argument("densities must be > 0");
    if (!(spec.size > 0.0)) throw std::invalid_argument("size must be > 0");
    if (!(spec.step_size > 0.0)) throw std::invalid_argument("step_size must be > 0");
    if (spec.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    if (spec.stride < 1) throw std::invalid_argument("stride must be >= 1");
}

EnsembleResult run_ensemble(const EnsembleSpec& spec, int workers) {
    validate(spec);
    const int n_densities = static_cast<int>(spec.densities.size());
    const int jobs = n_densities * spec.realizations;
    std::vector<RealizationRecord> records(static_cast<std::size_t>(jobs));

    // realizations are independent; seeding is per-realization, so results do
    // not depend on the worker count or schedule
    std::atomic<int> next{0};
    auto drain = [&] {
        for (;;) {
            const int job = next.fetch_add(1);
            if (job >= jobs) break;
            const int di = job / spec.realizations;
            const int ri = job % spec.realizations;
            records[static_cast<std::size_t>(job)] = run_realization(
                spec, spec.densities[static_cast<std::size_t>(di)],
                spec.base_seed + static_cast<std::uint64_t>(ri));
        }
    };
    workers = std::clamp(workers, 1, jobs);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();

    EnsembleResult result;
    result.spec = spec;
    result.per_density.reserve(static_cast<std::size_t>(n_densities));
    for (int di = 0; di < n_densities; ++di) {
        const double density = spec.densities[static_cast<std::size_t>(di)];
        const std::span<const RealizationRecord> recs(
            records.data() + static_cast<std::ptrdiff_t>(di) * spec.realizations,
            static_cast<std::size_t>(spec.realizations));

        DensityResult dr;
        dr.density = density;
        dr.n = make_init_spec_fixed_size(spec.geometry, spec.size, density, 0).n;
        dr.realizations = spec.realizations;

        std::size_t longest = 0;
        for (const auto& r : recs) longest = std::max(longest, r.na.size());
        for (std::size_t k = 0; k < longest; ++k) {
            std::vector<double> vals;
            for (const auto& r : recs)
                if (k < r.na.size()) vals.push_back(static_cast<double>(r.na[k]));
            const MeanStderr ms = mean_stderr(vals);
            dr.grid_t.push_back(static_cast<std::int64_t>(k) * spec.stride);
            dr.na_mean.push_back(ms.mean);
            dr.na_stderr.push_back(ms.stderr_of_mean);
            dr.active.push_back(ms.count);
        }
        dr.na0_mean = dr.na_mean.front();
        dr.na0_stderr = dr.na_stderr.front();

        std::vector<double> annuli;
        for (const auto& r : recs)
            if (std::isfinite(r.annulus)) annuli.push_back(r.annulus);
        if (annuli.empty()) {
            dr.annulus_mean = nan_value;
            dr.annulus_stderr = nan_value;
        } else {
            const MeanStderr ms = mean_stderr(annuli);
            dr.annulus_mean = ms.mean;
            dr.annulus_stderr = ms.stderr_of_mean;
        }

        std::vector<double> times;
        for (const auto& r : recs)
            if (r.assembly) times.push_back(static_cast<double>(*r.assembly));
        const MeanStderr ms = mean_stderr(times);
        dr.assembly_mean = ms.count > 0 ? ms.mean : nan_value;
        dr.assembly_stderr = ms.count > 0 ? ms.stderr_of_mean : nan_value;
        dr.assembled_count = ms.count;

        result.per_density.push_back(std::move(dr));
    }
    return result;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw std::invalid_argument("power-law fit needs at least 3 points");
    const std::size_t n = points.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0))
            throw std::invalid_argument("power-law fit needs strictly positive values");
        lx[i] = std::log(points[i].first);
        ly[i] = std::log(points[i].second);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("power-law fit needs at least two distinct x");
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.amplitude = std::exp(my - fit.exponent * mx);
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (my + fit.exponent * (lx[i] - mx));
        ssr += r * r;
    }
    fit.exponent_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
    fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    return fit;
}

namespace {

std::vector<std::pair<double, double>> density_points(const EnsembleResult& result,
                                                      bool use_annulus) {
    std::vector<std::pair<double, double>> pts;
    for (const DensityResult& dr : result.per_density) {
        const double y = use_annulus ? dr.annulus_mean : dr.na0_mean;
        if (std::isfinite(y)) pts.emplace_back(static_cast<double>(dr.n), y);
    }
    return pts;
}

}  // namespace

PowerLawFit attractor_count_scaling(const EnsembleResult& result) {
    return fit_power_law(density_points(result, false));
}

PowerLawFit annulus_width_scaling(const EnsembleResult& result) {
    return fit_power_law(density_points(result, true));
}

CollapseResult collapse_test(std::span<const Curve> curves) {
    if (curves.size() < 2) throw std::invalid_argument("collapse test needs at least 2 curves");
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const Curve& c : curves) {
        if (c.empty()) throw std::invalid_argument("collapse test got an empty curve");
        if (!(c.front().second > 0.0))
            throw std::invalid_argument("collapse test needs <N_A(0)> > 0");
        lo = std::max(lo, c.front().first);
        hi = std::min(hi, c.back().first);
    }
    if (hi < lo) throw std::invalid_argument("time supports do not overlap");

    CollapseResult result;
    for (const Curve& c : curves) {
        Curve norm;
        norm.reserve(c.size());
        const double scale = 1.0 / c.front().second;
        for (const auto& [t, v] : c) norm.emplace_back(t, v * scale);
        result.normalized.push_back(std::move(norm));
    }

    std::vector<double> grid;
    for (const Curve& c : result.normalized)
        for (const auto& [t, v] : c)
            if (t >= lo && t <= hi) grid.push_back(t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    auto interp = [](const Curve& c, double t) {
        const auto it = std::lower_bound(c.begin(), c.end(), t,
                                         [](const auto& p, double v) { return p.first < v; });
        if (it == c.begin()) return it->second;
        if (it == c.end()) return c.back().second;
        if (it->first == t) return it->second;
        const auto prev = it - 1;
        const double w = (t - prev->first) / (it->first - prev->first);
        return prev->second + w * (it->second - prev->second);
    };

    double worst = 0.0;
    for (const double t : grid) {
        for (std::size_t a = 0; a + 1 < result.normalized.size(); ++a) {
            const double fa = interp(result.normalized[a], t);
            for (std::size_t b = a + 1; b < result.normalized.size(); ++b) {
                const double fb = interp(result.normalized[b], t);
                worst = std::max(worst, std::fabs(fa - fb));
            }
        }
    }
    result.max_deviation = worst;
    return result;
}

}  // namespace farswarm
