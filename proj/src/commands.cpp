#include "emp/commands.hpp"

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emp/errors.hpp"
#include "emp/io.hpp"

namespace emp {

namespace {

std::string artifact_path(const OutputOptions& opts, const RunConfig& config,
                          const std::string& fallback, const std::string& ext) {
    std::filesystem::create_directories(opts.out_dir);
    const std::string base =
        config.output_basename.empty() ? fallback : config.output_basename;
    return (std::filesystem::path(opts.out_dir) / (base + ext)).string();
}

// Fold a coordinate into a periodic axis; ranges spanning 2*pi are treated
// as angles, anything else is left alone.
double fold_into_axis(double v, const std::array<double, 2>& range) {
    const double span = range[1] - range[0];
    if (std::abs(span - 2 * M_PI) > 1e-9) return v;
    double w = std::fmod(v - range[0], span);
    if (w < 0) w += span;
    return range[0] + w;
}

// Pull the two landscape-axis coordinates out of a rollout CSV written by
// cmd_rollout (columns: t_s, states..., actions..., empowerment).
std::vector<std::array<double, 2>> overlay_from_csv(const std::string& path,
                                                    const GridSpec& grid) {
    std::istringstream in(read_text_file(path));
    std::string line;
    std::vector<std::array<double, 2>> points;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        std::vector<double> fields;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) fields.push_back(std::stod(cell));
        const int c0 = 1 + grid.axis_indices[0];
        const int c1 = 1 + grid.axis_indices[1];
        if (c0 >= static_cast<int>(fields.size()) || c1 >= static_cast<int>(fields.size())) {
            throw IOError("overlay rollout has too few columns for the grid axes");
        }
        points.push_back({fold_into_axis(fields[c0], grid.axis_ranges[0]),
                          fold_into_axis(fields[c1], grid.axis_ranges[1])});
    }
    return points;
}

}  // namespace

std::vector<std::string> cmd_landscape(const RunConfig& config, const OutputOptions& opts) {
    const SystemModel model = config.make_model();
    const LandscapeGrid grid = evaluate_landscape(model, config.grid, config.variant,
                                                  config.horizon, config.channel, opts.workers);

    std::vector<std::string> written;
    const std::string csv = artifact_path(opts, config, "landscape", ".csv");
    write_landscape_csv(csv, grid);
    written.push_back(csv);

    const std::string json_path = artifact_path(opts, config, "landscape", ".json");
    write_text_file(json_path, nlohmann::json(grid).dump(2) + "\n");
    written.push_back(json_path);

    if (opts.svg) {
        std::vector<std::array<double, 2>> overlay;
        if (!opts.overlay_rollout_csv.empty()) {
            overlay = overlay_from_csv(opts.overlay_rollout_csv, config.grid);
        }
        const std::string svg = artifact_path(opts, config, "landscape", ".svg");
        write_text_file(svg, render_landscape_svg(grid, overlay));
        written.push_back(svg);
    }
    return written;
}

std::vector<std::string> cmd_rollout(const RunConfig& config, const OutputOptions& opts) {
    const SystemModel model = config.make_model();
    const Rollout rollout = run_rollout(model, config.start_state, config.duration_s,
                                        config.make_policy(), config.make_noise(), config.seed);

    std::vector<std::string> written;
    const std::string csv = artifact_path(opts, config, "rollout", ".csv");
    write_rollout_csv(csv, rollout, model.state_names);
    written.push_back(csv);

    const std::string json_path = artifact_path(opts, config, "rollout", ".json");
    write_text_file(json_path, nlohmann::json(rollout).dump(2) + "\n");
    written.push_back(json_path);

    if (opts.svg) {
        const std::string svg = artifact_path(opts, config, "rollout", ".svg");
        write_text_file(svg, render_rollout_svg(rollout, model.state_names));
        written.push_back(svg);
    }
    return written;
}

std::vector<std::string> cmd_convergence(const RunConfig& config, const OutputOptions& opts) {
    const SystemModel model = config.make_model();
    const std::vector<ConvergencePoint> points =
        convergence_study(model, config.start_state, config.variant, config.convergence_t_e_s,
                          config.convergence_dt_list, config.channel);

    std::vector<std::string> written;
    const std::string csv = artifact_path(opts, config, "convergence", ".csv");
    write_convergence_csv(csv, points);
    written.push_back(csv);

    const std::string json_path = artifact_path(opts, config, "convergence", ".json");
    write_text_file(json_path, nlohmann::json(points).dump(2) + "\n");
    written.push_back(json_path);
    return written;
}

std::vector<std::string> cmd_lyapunov(const RunConfig& config, const OutputOptions& opts) {
    const SystemModel model = config.make_model();
    const LyapunovResult result =
        controlled_lyapunov(model, config.start_state, config.lyapunov_horizon_steps,
                            config.lyapunov_dt, config.channel);

    std::vector<std::string> written;
    const std::string csv = artifact_path(opts, config, "lyapunov", ".csv");
    write_lyapunov_csv(csv, result);
    written.push_back(csv);

    const std::string json_path = artifact_path(opts, config, "lyapunov", ".json");
    write_text_file(json_path, nlohmann::json(result).dump(2) + "\n");
    written.push_back(json_path);
    return written;
}

}  // namespace emp
