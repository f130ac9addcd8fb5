#include "farswarm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "farswarm/rng.hpp"

namespace farswarm {

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// stable class color: hash the attractor's particle index into a hue
std::string class_color(int attractor_index) {
    const std::uint64_t h = mix64(static_cast<std::uint64_t>(attractor_index));
    const double hue = static_cast<double>(h % 360000ULL) / 1000.0;
    const double sat = 0.62, light = 0.45;
    const double c = (1.0 - std::fabs(2.0 * light - 1.0)) * sat;
    const double hp = hue / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0.0, g = 0.0, b = 0.0;
    switch (static_cast<int>(hp)) {
        case 0: r = c, g = x; break;
        case 1: r = x, g = c; break;
        case 2: g = c, b = x; break;
        case 3: g = x, b = c; break;
        case 4: r = x, b = c; break;
        default: r = c, b = x; break;
    }
    const double m = light - c / 2.0;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>((r + m) * 255.0),
                  static_cast<int>((g + m) * 255.0), static_cast<int>((b + m) * 255.0));
    return buf;
}

}  // namespace

std::array<double, 4> default_window(const SwarmState& state) {
    double xmin = state.positions.front().x, xmax = xmin;
    double ymin = state.positions.front().y, ymax = ymin;
    for (const Vec& p : state.positions) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    // square window with a 5% margin, never degenerate
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    double half = 0.5 * std::max(xmax - xmin, ymax - ymin);
    half = half > 0.0 ? half * 1.05 : 1.0;
    return {cx - half, cx + half, cy - half, cy + half};
}

std::string render_frame(const SwarmState& state, const AttractorReport* report,
                         const RenderOptions& options) {
    if (state.dim > 2) throw std::invalid_argument("3D states are not rendered");
    if (state.positions.empty()) throw std::invalid_argument("no particles to render");
    if (options.image_size < 16) throw std::invalid_argument("image_size too small");

    const std::array<double, 4> win = options.window ? *options.window : default_window(state);
    const double scale = options.image_size / std::max(win[1] - win[0], 1e-300);
    const double size = options.image_size;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.image_size
        << "\" height=\"" << options.image_size << "\" viewBox=\"0 0 " << options.image_size << ' '
        << options.image_size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        const Vec& p = state.positions[i];
        const double cx = (p.x - win[0]) * scale;
        const double cy = size - (p.y - win[2]) * scale;  // SVG y grows downward
        std::string color = "#1b2a41";
        if (report != nullptr && i < report->targets.size() && report->targets[i] >= 0)
            color = class_color(report->targets[i]);
        out << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(cy) << "\" r=\""
            << px(options.dot_radius) << "\" fill=\"" << color << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace farswarm
