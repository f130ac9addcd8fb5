#include "farswarm/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "farswarm/analysis.hpp"
#include "farswarm/dynamics.hpp"
#include "farswarm/hull.hpp"

namespace farswarm {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_double_17(double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

namespace {

void write_frame_line(std::ostream& out, const SwarmState& state) {
    out << "{\"t\":" << state.t << ",\"positions\":[";
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        const Vec& p = state.positions[i];
        if (i > 0) out << ',';
        out << '[' << format_double_17(p.x);
        if (state.dim >= 2) out << ',' << format_double_17(p.y);
        if (state.dim >= 3) out << ',' << format_double_17(p.z);
        out << ']';
    }
    out << "]}\n";
}

}  // namespace

FrameWriter::FrameWriter(std::ostream& out, std::int64_t stride) : out_(out), stride_(stride) {
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
}

void FrameWriter::observe(const SwarmState& state) {
    if (state.t % stride_ != 0) return;
    write_frame_line(out_, state);
    last_written_ = state.t;
}

void FrameWriter::finish(const SwarmState& state) {
    if (state.t == last_written_) return;
    write_frame_line(out_, state);
    last_written_ = state.t;
}

std::vector<Frame> read_frames(std::istream& in) {
    std::vector<Frame> frames;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error("frames line " + std::to_string(lineno) + ": " + e.what());
        }
        Frame frame;
        frame.t = j.at("t").get<std::int64_t>();
        const auto& pts = j.at("positions");
        frame.positions.reserve(pts.size());
        frame.dim = pts.empty() ? 2 : static_cast<int>(pts.front().size());
        for (const auto& p : pts) {
            Vec v;
            v.x = p.at(0).get<double>();
            if (p.size() > 1) v.y = p.at(1).get<double>();
            if (p.size() > 2) v.z = p.at(2).get<double>();
            frame.positions.push_back(v);
        }
        frames.push_back(std::move(frame));
    }
    return frames;
}

SwarmState frame_to_state(const Frame& frame, double step_size, Rule rule, std::uint64_t seed) {
    SwarmState state;
    state.positions = frame.positions;
    state.dim = frame.dim;
    state.t = frame.t;
    state.step_size = step_size;
    state.rule = rule;
    state.seed = seed;
    return state;
}

StatsWriter::StatsWriter(std::ostream& out, std::int64_t stride) : out_(out), stride_(stride) {
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
    out_ << "t,n_a,extent,assembled\n";
}

void StatsWriter::write_row(const SwarmState& state) {
    const AttractorReport report = target_report(state);
    out_ << state.t << ',' << report.n_a << ',' << format_double(extent(state.positions, state.dim))
         << ',' << (is_assembled(state) ? 1 : 0) << '\n';
    last_written_ = state.t;
}

void StatsWriter::observe(const SwarmState& state) {
    if (state.t % stride_ != 0) return;
    write_row(state);
}

void StatsWriter::finish(const SwarmState& state) {
    if (state.t == last_written_) return;
    write_row(state);
}

void write_ensemble_series_csv(std::ostream& out, const EnsembleResult& result) {
    out << "density,n,realizations,t,mean,stderr\n";
    for (const DensityResult& dr : result.per_density) {
        for (std::size_t k = 0; k < dr.grid_t.size(); ++k) {
            out << format_double(dr.density) << ',' << dr.n << ',' << dr.active[k] << ','
                << dr.grid_t[k] << ',' << format_double(dr.na_mean[k]) << ','
                << format_double(dr.na_stderr[k]) << '\n';
        }
    }
}

void write_ensemble_summary_csv(std::ostream& out, const EnsembleResult& result) {
    out << "density,n,realizations,na0_mean,na0_stderr,annulus_width_mean,annulus_width_stderr,"
           "assembly_time_mean,assembly_time_stderr,assembled_count\n";
    for (const DensityResult& dr : result.per_density) {
        out << format_double(dr.density) << ',' << dr.n << ',' << dr.realizations << ','
            << format_double(dr.na0_mean) << ',' << format_double(dr.na0_stderr) << ','
            << format_double(dr.annulus_mean) << ',' << format_double(dr.annulus_stderr) << ','
            << format_double(dr.assembly_mean) << ',' << format_double(dr.assembly_stderr) << ','
            << dr.assembled_count << '\n';
    }
}

}  // namespace farswarm
