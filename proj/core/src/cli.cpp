#include "farswarm/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "farswarm/analysis.hpp"
#include "farswarm/config.hpp"
#include "farswarm/dynamics.hpp"
#include "farswarm/ensemble.hpp"
#include "farswarm/io.hpp"
#include "farswarm/parallel.hpp"
#include "farswarm/svg.hpp"

namespace farswarm {

namespace {

namespace fs = std::filesystem;

struct CliArgs {
    std::string config_path;
    std::string out_override;
    std::int64_t seed_override = -1;
    std::string frames_path;
    bool render = false;
    bool t0_only = false;
    std::int64_t frame_stride = 1;
    int image_size = 800;
    bool color_by_slice = false;
};

void add_common(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON run configuration")->required();
    cmd->add_option("--out", args.out_override, "output directory (overrides config)");
    cmd->add_option("--seed", args.seed_override, "seed (overrides config)");
}

void add_render_options(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--frame-stride", args.frame_stride, "render every k-th recorded frame")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--image-size", args.image_size, "SVG canvas size in pixels")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--color-by-slice", args.color_by_slice, "fill dots by follower class");
}

RunConfig load(const CliArgs& args) {
    RunConfig cfg = load_config(args.config_path);
    if (!args.out_override.empty()) cfg.out = args.out_override;
    if (args.seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed_override);
    cfg.frame_stride = args.frame_stride;
    cfg.image_size = args.image_size;
    cfg.color_by_slice = args.color_by_slice;
    return cfg;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    return out;
}

void render_frames_to_svg(const std::vector<Frame>& frames, const RunConfig& cfg,
                          const fs::path& dir) {
    if (frames.empty()) throw std::runtime_error("no frames to render");
    RenderOptions options;
    options.image_size = cfg.image_size;
    // fixed window from the first frame so the sequence does not rescale
    options.window =
        default_window(frame_to_state(frames.front(), cfg.step_size, cfg.to_rule(), cfg.seed));

    std::int64_t rendered = 0;
    for (std::size_t k = 0; k < frames.size(); ++k) {
        const bool last = k + 1 == frames.size();
        if (static_cast<std::int64_t>(k) % cfg.frame_stride != 0 && !last) continue;
        const SwarmState state = frame_to_state(frames[k], cfg.step_size, cfg.to_rule(), cfg.seed);
        std::string svg;
        if (cfg.color_by_slice) {
            const AttractorReport report = target_report(state);
            svg = render_frame(state, &report, options);
        } else {
            svg = render_frame(state, nullptr, options);
        }
        char name[32];
        std::snprintf(name, sizeof name, "frame_%06lld.svg", static_cast<long long>(state.t));
        open_out(dir / name) << svg;
        ++rendered;
    }
    std::cout << "rendered " << rendered << " frames to " << dir.string() << "\n";
}

int cmd_run(const CliArgs& args) {
    const RunConfig cfg = load(args);
    const fs::path dir(cfg.out);
    fs::create_directories(dir);

    SwarmState state = generate(cfg.to_init_spec(), cfg.step_size, cfg.to_rule());
    std::ofstream frames_out = open_out(dir / "frames.ndjson");
    std::ofstream stats_out = open_out(dir / "stats.csv");
    FrameWriter frame_writer(frames_out, cfg.stride);
    StatsWriter stats_writer(stats_out, cfg.stride);
    const std::vector<StepObserver> observers{
        [&](const SwarmState& s) { frame_writer.observe(s); },
        [&](const SwarmState& s) { stats_writer.observe(s); },
    };

    const RunOutcome outcome = run(std::move(state), cfg.max_steps, observers, worker_count());
    frame_writer.finish(outcome.final_state);
    stats_writer.finish(outcome.final_state);
    frames_out.close();
    stats_out.close();

    if (outcome.assembled()) {
        const Vec p = assembly_point(outcome);
        std::cout << "assembled at t=" << *outcome.assembly_time << " near (" << format_double(p.x)
                  << ", " << format_double(p.y) << ")\n";
    } else {
        std::cout << "not assembled within " << cfg.max_steps << " steps\n";
    }
    std::cout << "wrote " << (dir / "frames.ndjson").string() << " and "
              << (dir / "stats.csv").string() << "\n";

    if (args.render) {
        std::ifstream in(dir / "frames.ndjson");
        render_frames_to_svg(read_frames(in), cfg, dir);
    }
    return 0;
}

int cmd_ensemble(const CliArgs& args) {
    const RunConfig cfg = load(args);
    EnsembleSpec spec = cfg.to_ensemble_spec();
    spec.evolve = !args.t0_only;
    const fs::path dir(cfg.out);
    fs::create_directories(dir);

    const EnsembleResult result = run_ensemble(spec, worker_count());
    {
        std::ofstream out = open_out(dir / "ensemble_series.csv");
        write_ensemble_series_csv(out, result);
    }
    {
        std::ofstream out = open_out(dir / "ensemble_summary.csv");
        write_ensemble_summary_csv(out, result);
    }

    try {
        const PowerLawFit na_fit = attractor_count_scaling(result);
        std::printf("<N_A(0)> ~ N^%.4f  (stderr %.4f, r^2 %.4f)\n", na_fit.exponent,
                    na_fit.exponent_stderr, na_fit.r_squared);
    } catch (const std::exception& e) {
        std::printf("<N_A(0)> scaling fit skipped: %s\n", e.what());
    }
    try {
        const PowerLawFit width_fit = annulus_width_scaling(result);
        std::printf("<annulus width> ~ N^%.4f  (stderr %.4f, r^2 %.4f)\n", width_fit.exponent,
                    width_fit.exponent_stderr, width_fit.r_squared);
    } catch (const std::exception& e) {
        std::printf("<annulus width> scaling fit skipped: %s\n", e.what());
    }
    if (spec.evolve && result.per_density.size() >= 2) {
        std::vector<Curve> curves;
        for (const DensityResult& dr : result.per_density) curves.push_back(dr.curve());
        const CollapseResult collapse = collapse_test(curves);
        std::printf("collapse max deviation: %.4f\n", collapse.max_deviation);
    }
    std::cout << "wrote " << (dir / "ensemble_series.csv").string() << " and "
              << (dir / "ensemble_summary.csv").string() << "\n";
    return 0;
}

int cmd_analyze(const CliArgs& args) {
    const RunConfig cfg = load(args);
    const fs::path dir(cfg.out);
    std::string frames_path = args.frames_path;
    if (frames_path.empty()) frames_path = (dir / "frames.ndjson").string();

    std::ifstream in(frames_path);
    if (!in) throw std::runtime_error("cannot open frames file " + frames_path);
    const std::vector<Frame> frames = read_frames(in);

    fs::create_directories(dir);
    std::ofstream out = open_out(dir / "analysis.csv");
    out << "t,n_a,extent,assembled\n";
    for (const Frame& frame : frames) {
        const SwarmState state = frame_to_state(frame, cfg.step_size, cfg.to_rule(), cfg.seed);
        const AttractorReport report = target_report(state);
        out << state.t << ',' << report.n_a << ','
            << format_double(extent(state.positions, state.dim)) << ','
            << (is_assembled(state) ? 1 : 0) << '\n';
    }
    std::cout << "analyzed " << frames.size() << " frames into " << (dir / "analysis.csv").string()
              << "\n";
    return 0;
}

int cmd_render(const CliArgs& args) {
    const RunConfig cfg = load(args);
    const fs::path dir(cfg.out);
    std::string frames_path = args.frames_path;
    if (frames_path.empty()) frames_path = (dir / "frames.ndjson").string();

    std::ifstream in(frames_path);
    if (!in) throw std::runtime_error("cannot open frames file " + frames_path);
    fs::create_directories(dir);
    render_frames_to_svg(read_frames(in), cfg, dir);
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"farswarm: swarm aggregation under the farthest-point rule"};
    app.require_subcommand(1);

    CliArgs run_args, ens_args, ana_args, ren_args;

    CLI::App* run_cmd = app.add_subcommand("run", "simulate one trajectory");
    add_common(run_cmd, run_args);
    run_cmd->add_flag("--render", run_args.render, "also render recorded frames to SVG");
    add_render_options(run_cmd, run_args);

    CLI::App* ens_cmd = app.add_subcommand("ensemble", "seeded density sweep with fits");
    add_common(ens_cmd, ens_args);
    ens_cmd->add_flag("--t0-only", ens_args.t0_only, "initial-state observables only");

    CLI::App* ana_cmd = app.add_subcommand("analyze", "recompute reports from a trajectory");
    add_common(ana_cmd, ana_args);
    ana_cmd->add_option("--frames", ana_args.frames_path,
                        "NDJSON trajectory (default <out>/frames.ndjson)");

    CLI::App* ren_cmd = app.add_subcommand("render", "render a trajectory to SVG frames");
    add_common(ren_cmd, ren_args);
    ren_cmd->add_option("--frames", ren_args.frames_path,
                        "NDJSON trajectory (default <out>/frames.ndjson)");
    add_render_options(ren_cmd, ren_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_args);
        if (ens_cmd->parsed()) return cmd_ensemble(ens_args);
        if (ana_cmd->parsed()) return cmd_analyze(ana_args);
        if (ren_cmd->parsed()) return cmd_render(ren_args);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace farswarm
