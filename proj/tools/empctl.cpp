// Command-line frontend: compute empowerment landscapes, closed-loop
// rollouts, time-step convergence tables, and controlled Lyapunov spectra
// for the built-in benchmark systems. See README for the config grammar.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "emp/commands.hpp"
#include "emp/errors.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    emp::OutputOptions out;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void add_common(CLI::App* cmd, CliArgs& args, bool with_overlay) {
    cmd->add_option("--config", args.config_path, "config file (INI-style; see README)")
        ->envname("EMPCTL_CONFIG");
    cmd->add_option("--out", args.out.out_dir, "output directory (default .)")
        ->envname("EMPCTL_OUT");
    cmd->add_option("--seed", args.seed, "override the config seed")->envname("EMPCTL_SEED");
    cmd->add_option("--workers", args.out.workers, "worker threads (0 = all cores)")
        ->envname("EMPCTL_WORKERS");
    cmd->add_flag("--svg", args.out.svg, "also render an SVG figure")
        ->envname("EMPCTL_SVG");
    if (with_overlay) {
        cmd->add_option("--overlay", args.out.overlay_rollout_csv,
                        "rollout.csv whose trajectory is drawn over the heatmap");
    }
}

emp::RunConfig load(const CliArgs& args, const CLI::App* cmd) {
    emp::RunConfig config = args.config_path.empty()
                                ? emp::parse_config("")
                                : emp::load_config_file(args.config_path);
    if (cmd->count("--seed") > 0) config.seed = args.seed;
    return config;
}

void report_error(const std::string& type, const std::string& message) {
    nlohmann::json err = {{"error", {{"type", type}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"empowerment landscapes and greedy empowerment-maximizing control"};
    app.require_subcommand(1);

    CliArgs args;
    CLI::App* landscape = app.add_subcommand("landscape", "empowerment over a state-space grid");
    CLI::App* rollout = app.add_subcommand("rollout", "closed-loop greedy control simulation");
    CLI::App* convergence =
        app.add_subcommand("convergence", "empowerment vs. time-step refinement");
    CLI::App* lyapunov =
        app.add_subcommand("lyapunov", "controlled Lyapunov exponents at the start state");
    add_common(landscape, args, true);
    add_common(rollout, args, false);
    add_common(convergence, args, false);
    add_common(lyapunov, args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<std::string> written;
        if (landscape->parsed()) {
            written = emp::cmd_landscape(load(args, landscape), args.out);
        } else if (rollout->parsed()) {
            written = emp::cmd_rollout(load(args, rollout), args.out);
        } else if (convergence->parsed()) {
            written = emp::cmd_convergence(load(args, convergence), args.out);
        } else if (lyapunov->parsed()) {
            written = emp::cmd_lyapunov(load(args, lyapunov), args.out);
        }
        for (const auto& path : written) std::cout << path << "\n";
        return 0;
    } catch (const emp::ParseError& e) {
        report_error("ParseError", e.what());
    } catch (const emp::NonFiniteState& e) {
        report_error("NonFiniteState", e.what());
    } catch (const emp::IOError& e) {
        report_error("IOError", e.what());
    } catch (const std::exception& e) {
        report_error("Error", e.what());
    }
    return 1;
}
