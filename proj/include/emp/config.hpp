#ifndef EMP_CONFIG_HPP
#define EMP_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "emp/capacity.hpp"
#include "emp/controller.hpp"
#include "emp/landscape.hpp"
#include "emp/systems.hpp"

namespace emp {

enum class SystemKind { Pendulum, DoublePendulum, CartPole, Linear };

/**
 * @brief Fully validated run configuration.
 *
 * Parsed from a flat INI-style document (see README for the grammar and
 * the full key list). Every cross-field constraint of the underlying
 * modules is re-checked at parse time so errors carry the offending key
 * and line.
 */
struct RunConfig {
    SystemKind system = SystemKind::Pendulum;
    PendulumParams pendulum;
    DoublePendulumParams double_pendulum;
    CartPoleParams cartpole;
    double linear_alpha = 0.0;
    double gain_scale = 1.0;  ///< uniform actuator-strength scale; 0 = uncontrollable

    Variant variant = Variant::Classic;
    HorizonSpec horizon = HorizonSpec::classic(1e-3, 500);
    ChannelSpec channel;
    double process_std = 0.01;

    double action_bound = 1.0;
    int action_grid_size = 21;
    double decision_dt = 0.02;
    double sim_dt = 1e-3;
    int expectation_samples = 1;

    double duration_s = 30.0;
    std::uint64_t seed = 0;
    StateVector start_state;

    GridSpec grid;
    double convergence_t_e_s = 0.5;
    std::vector<double> convergence_dt_list = {4e-3, 1e-3, 2.5e-4, 6.25e-5};
    int lyapunov_horizon_steps = 30000;
    double lyapunov_dt = 1e-3;
    std::string output_basename;  ///< empty: use the subcommand name

    SystemModel make_model() const;
    NoiseSpec make_noise() const { return {process_std, channel.noise_std}; }
    ControlPolicySpec make_policy() const;
};

/// Parse and validate a configuration document. Unknown sections or keys
/// are errors; all failures throw ParseError with key and line.
RunConfig parse_config(const std::string& text);

/// Convenience: read the file and parse it.
RunConfig load_config_file(const std::string& path);

const char* to_string(SystemKind k);
const char* to_string(Variant v);
const char* to_string(CapacityConvention c);

}  // namespace emp

#endif  // EMP_CONFIG_HPP
