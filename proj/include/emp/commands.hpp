#ifndef EMP_COMMANDS_HPP
#define EMP_COMMANDS_HPP

#include <string>
#include <vector>

#include "emp/config.hpp"

namespace emp {

struct OutputOptions {
    std::string out_dir = ".";
    int workers = 0;       ///< 0: OpenMP default
    bool svg = false;
    std::string overlay_rollout_csv;  ///< landscape only: trajectory overlay source
};

/// Each command writes its CSV and JSON artifacts (plus SVG when asked)
/// into out_dir and returns the paths written.
std::vector<std::string> cmd_landscape(const RunConfig& config, const OutputOptions& opts);
std::vector<std::string> cmd_rollout(const RunConfig& config, const OutputOptions& opts);
std::vector<std::string> cmd_convergence(const RunConfig& config, const OutputOptions& opts);
std::vector<std::string> cmd_lyapunov(const RunConfig& config, const OutputOptions& opts);

}  // namespace emp

#endif  // EMP_COMMANDS_HPP
