#ifndef FARSWARM_RNG_HPP
#define FARSWARM_RNG_HPP

#include <cstdint>
#include <random>

namespace farswarm {

// Sequential generator used for initial-condition sampling. The engine is
// std::mt19937_64 (bit-exact across platforms); the floating-point draw is
// done by hand because std::uniform_real_distribution is not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t v) {
    v += 0x9E3779B97F4A7C15ULL;
    v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ULL;
    v = (v ^ (v >> 27)) * 0x94D049BB133111EBULL;
    return v ^ (v >> 31);
}

// Counter-based tie-break draw: a pure function of (seed, timestep, particle),
// so the same choice can be recomputed by diagnostics without sharing or
// perturbing any generator state. Uniform over [0, n_tied).
constexpr int tie_pick(std::uint64_t seed, std::int64_t t, int particle, int n_tied) {
    std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(t)));
    h = mix64(h ^ mix64(static_cast<std::uint64_t>(particle) + 0x632BE59BD9B4E019ULL));
    return static_cast<int>(h % static_cast<std::uint64_t>(n_tied));
}

}  // namespace farswarm

#endif
