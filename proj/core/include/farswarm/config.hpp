#ifndef FARSWARM_CONFIG_HPP
#define FARSWARM_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "farswarm/ensemble.hpp"
#include "farswarm/init.hpp"
#include "farswarm/state.hpp"

namespace farswarm {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Validated run configuration. The JSON schema accepts exactly the keys
// geometry, n, density, dx, rule, cutoff, seed, max_steps, stride, densities,
// realizations, out; anything else is rejected by name.
struct RunConfig {
    GeometryKind geometry = GeometryKind::Disc;
    int n = 0;
    double density = 0.0;
    double step_size = 0.0;  // "dx"
    RuleKind rule_kind = RuleKind::FarthestPoint;
    double cutoff = 0.0;  // defaults to dx for the nearest rule
    std::uint64_t seed = 0;
    std::int64_t max_steps = 100000;
    std::int64_t stride = 1;
    std::vector<double> densities;  // ensemble sweeps only
    int realizations = 0;           // 0 = not set
    std::string out = "out";

    // render options; CLI flags, not config keys
    std::int64_t frame_stride = 1;
    int image_size = 800;
    bool color_by_slice = false;

    Rule to_rule() const;
    InitSpec to_init_spec() const;
    // sweep at the radius fixed by the base (n, density) pair; requires
    // densities and realizations
    EnsembleSpec to_ensemble_spec() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace farswarm

#endif
