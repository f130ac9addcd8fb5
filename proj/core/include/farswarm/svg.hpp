#ifndef FARSWARM_SVG_HPP
#define FARSWARM_SVG_HPP

#include <array>
#include <optional>
#include <string>

#include "farswarm/analysis.hpp"
#include "farswarm/state.hpp"

namespace farswarm {

struct RenderOptions {
    int image_size = 800;     // square canvas, pixels
    double dot_radius = 1.6;  // pixels
    // fixed world window {xmin, xmax, ymin, ymax}; derived from the state's
    // bounding box when absent (pass one to keep a frame sequence steady)
    std::optional<std::array<double, 4>> window;
};

// Scatter snapshot of a 1D or 2D state. With a report, dots are filled by
// follower class (palette hashed from the attractor index); otherwise
// monochrome. Output bytes are a pure function of the inputs.
std::string render_frame(const SwarmState& state, const AttractorReport* report,
                         const RenderOptions& options);

// window that fits the state with a small margin
std::array<double, 4> default_window(const SwarmState& state);

}  // namespace farswarm

#endif
