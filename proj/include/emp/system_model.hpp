#ifndef EMP_SYSTEM_MODEL_HPP
#define EMP_SYSTEM_MODEL_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "emp/types.hpp"

namespace emp {

/**
 * @brief Controlled dynamical system dx = f(x)dt + g(x)da + noise.
 *
 * Holds the continuous-time drift f, the control gain g, and the analytic
 * drift Jacobian. All maps are pure functions of the state; instances are
 * immutable after construction and safe to share across threads.
 */
struct SystemModel {
    int d_x = 0;
    int d_a = 0;
    std::function<StateVector(const StateVector&)> drift;        ///< f(x), length d_x
    std::function<Matrix(const StateVector&)> gain;              ///< g(x), d_x x d_a
    std::function<Matrix(const StateVector&)> drift_jacobian;    ///< df/dx, d_x x d_x
    std::vector<std::string> state_names;
};

/// Process and observation noise scales. Process noise enters through the
/// control gain (the same channels the agent drives); observation noise is
/// the resolution at which observed states are read out.
struct NoiseSpec {
    double process_std = 0.0;  ///< Wiener increment scale, per sqrt(s)
    double obs_std = 1.0;      ///< Gaussian observation noise std, must be > 0
};

using RngStream = std::mt19937_64;

/// One explicit-Euler step: x + f(x)*dt + g(x)*a*dt.
/// Throws NonFiniteState if any output component is NaN/Inf.
StateVector step_deterministic(const SystemModel& model, const StateVector& x,
                               const ActionVector& a, double dt);

/// Euler-Maruyama step: the deterministic step plus g(x)*xi, where xi has
/// one Gaussian component per action channel with std process_std*sqrt(dt).
/// Identical stream state implies identical output.
StateVector step_stochastic(const SystemModel& model, const StateVector& x,
                            const ActionVector& a, double dt, const NoiseSpec& noise,
                            RngStream& rng);

/// Central-difference Jacobian of fn at x, column j = (fn(x+h e_j) - fn(x-h e_j)) / 2h.
Matrix finite_diff_jacobian(const std::function<StateVector(const StateVector&)>& fn,
                            const StateVector& x, double h);

}  // namespace emp

#endif  // EMP_SYSTEM_MODEL_HPP
