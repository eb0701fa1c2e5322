#include "emp/sensitivity.hpp"

#include <stdexcept>
#include <string>

#include "emp/errors.hpp"

namespace emp {

void HorizonSpec::validate() const {
    if (dt <= 0.0) throw std::invalid_argument("horizon: dt must be > 0");
    if (horizon_steps < 1) throw std::invalid_argument("horizon: horizon_steps must be >= 1");
    if (action_steps < 1) throw std::invalid_argument("horizon: action_steps must be >= 1");
    if (gap_steps < 0) throw std::invalid_argument("horizon: gap_steps must be >= 0");
    if (action_steps + gap_steps > horizon_steps) {
        throw std::invalid_argument(
            "horizon: action_steps + gap_steps must not exceed horizon_steps");
    }
}

AutonomousRollout rollout_autonomous(const SystemModel& model, const StateVector& x0,
                                     const HorizonSpec& spec) {
    spec.validate();
    if (!x0.allFinite()) throw NonFiniteState("rollout_autonomous: x0 not finite");

    AutonomousRollout out;
    out.spec = spec;
    out.states.reserve(spec.horizon_steps + 1);
    out.step_jacobians.reserve(spec.horizon_steps);
    out.gains.reserve(spec.horizon_steps);

    const Matrix eye = Matrix::Identity(model.d_x, model.d_x);
    StateVector x = x0;
    out.states.push_back(x);
    for (int tau = 0; tau < spec.horizon_steps; ++tau) {
        out.step_jacobians.push_back(eye + model.drift_jacobian(x) * spec.dt);
        out.gains.push_back(model.gain(x) * spec.dt);
        x = x + model.drift(x) * spec.dt;
        if (!x.allFinite()) {
            throw NonFiniteState("rollout_autonomous: state blew up at step " +
                                 std::to_string(tau + 1));
        }
        out.states.push_back(x);
    }
    return out;
}

Matrix action_sensitivity(const AutonomousRollout& rollout, int s, int r) {
    const int horizon = rollout.spec.horizon_steps;
    if (r < 0 || s <= r || s > horizon) {
        throw IndexOutOfRange("action_sensitivity: need 0 <= r < s <= horizon_steps, got s=" +
                              std::to_string(s) + " r=" + std::to_string(r));
    }
    Matrix block = rollout.gains[r];
    for (int tau = r + 2; tau <= s; ++tau) {
        block = rollout.step_jacobians[tau - 1] * block;
    }
    return block;
}

SensitivityMatrix build_sensitivity_matrix(const SystemModel& model, const StateVector& x0,
                                           const HorizonSpec& spec) {
    const AutonomousRollout rollout = rollout_autonomous(model, x0, spec);
    const int d_x = model.d_x;
    const int d_a = model.d_a;
    const int first_obs = spec.first_observed();
    const int n_obs = spec.observed_count();
    const int n_act = spec.action_steps;

    SensitivityMatrix result;
    result.spec = spec;
    result.d_x = d_x;
    result.d_a = d_a;
    result.entries.resize(d_x * n_obs, d_a * n_act);

    if (n_obs == 1) {
        // Only the final state is observed: one suffix product of step
        // Jacobians serves every action column.
        Matrix suffix = Matrix::Identity(d_x, d_x);
        for (int r = spec.horizon_steps - 1; r >= 0; --r) {
            if (r < n_act) {
                const int col = (n_act - 1 - r) * d_a;
                result.entries.block(0, col, d_x, d_a) = suffix * rollout.gains[r];
            }
            if (r > 0) suffix = suffix * rollout.step_jacobians[r];
        }
        return result;
    }

    for (int r = 0; r < n_act; ++r) {
        const int col = (n_act - 1 - r) * d_a;
        Matrix running = rollout.gains[r];  // d state_{r+1} / d action_r
        for (int s = r + 1; s <= spec.horizon_steps; ++s) {
            if (s > r + 1) running = rollout.step_jacobians[s - 1] * running;
            if (s >= first_obs) {
                const int row = (spec.horizon_steps - s) * d_x;
                result.entries.block(row, col, d_x, d_a) = running;
            }
        }
    }
    return result;
}

}  // namespace emp
