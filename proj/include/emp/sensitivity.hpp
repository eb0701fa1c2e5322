#ifndef EMP_SENSITIVITY_HPP
#define EMP_SENSITIVITY_HPP

#include <vector>

#include "emp/system_model.hpp"
#include "emp/types.hpp"

namespace emp {

/**
 * @brief Index triple selecting which generalized empowerment is computed.
 *
 * Over a horizon of horizon_steps time steps of length dt, actions are
 * applied for the first action_steps steps; after gap_steps further steps
 * the state sequence is observed up to the horizon. Special cases:
 *   action_steps = horizon_steps, gap = 0   -> final-state empowerment
 *   action_steps = 1, gap = 0               -> single-kick trajectory response
 *   action_steps = 1, gap = horizon_steps-1 -> single-kick final-state response
 */
struct HorizonSpec {
    double dt = 1e-3;
    int horizon_steps = 500;  ///< index of the last observed state
    int action_steps = 500;   ///< number of action steps, >= 1
    int gap_steps = 0;        ///< steps between last action and first observation

    /// Index of the first observed state.
    int first_observed() const { return action_steps + gap_steps; }
    /// Number of observed states.
    int observed_count() const { return horizon_steps - first_observed() + 1; }

    void validate() const;

    static HorizonSpec classic(double dt, int horizon_steps) {
        return {dt, horizon_steps, horizon_steps, 0};
    }
    static HorizonSpec kicked(double dt, int horizon_steps) {
        return {dt, horizon_steps, 1, 0};
    }
    static HorizonSpec single_kick_final(double dt, int horizon_steps) {
        return {dt, horizon_steps, 1, horizon_steps - 1};
    }

    bool operator==(const HorizonSpec&) const = default;
};

/// Zero-action trajectory with the per-step linearization data: the Euler
/// map Jacobians I + df/dx * dt and the per-step control gains g * dt.
struct AutonomousRollout {
    std::vector<StateVector> states;      ///< horizon_steps + 1 entries, states[0] = x0
    std::vector<Matrix> step_jacobians;   ///< horizon_steps entries, d_x x d_x
    std::vector<Matrix> gains;            ///< horizon_steps entries, d_x x d_a
    HorizonSpec spec;
};

/**
 * @brief Block matrix of state responses to past actions.
 *
 * Shape (d_x * observed_count) x (d_a * action_steps), blocks in
 * reverse-time order: block row i holds state horizon_steps - i, block
 * column j holds action action_steps - 1 - j. Block (i, j) is the partial
 * derivative of that state with respect to that action along the
 * autonomous trajectory.
 */
struct SensitivityMatrix {
    Matrix entries;
    HorizonSpec spec;
    int d_x = 0;
    int d_a = 0;
};

/// Roll the zero-action Euler map forward and record linearization data.
AutonomousRollout rollout_autonomous(const SystemModel& model, const StateVector& x0,
                                     const HorizonSpec& spec);

/// d state_s / d action_r: the chained product of step Jacobians from step
/// r+1 through s-1 applied to the gain at step r. For s = r+1 this is
/// exactly gains[r].
Matrix action_sensitivity(const AutonomousRollout& rollout, int s, int r);

/// Assemble all blocks for the spec's observation window. Each action
/// column is filled by one forward pass that reuses the running Jacobian
/// product; the single-observed-state case uses a shared suffix product
/// across columns instead.
SensitivityMatrix build_sensitivity_matrix(const SystemModel& model, const StateVector& x0,
                                           const HorizonSpec& spec);

}  // namespace emp

#endif  // EMP_SENSITIVITY_HPP
