#ifndef EMP_CONTROLLER_HPP
#define EMP_CONTROLLER_HPP

#include <cstdint>
#include <vector>

#include "emp/capacity.hpp"
#include "emp/sensitivity.hpp"
#include "emp/system_model.hpp"

namespace emp {

enum class Variant { Classic, KickedCef, ControlledLyapunov };

/// Shape a horizon for the given variant from a time step and step count.
HorizonSpec variant_horizon(Variant variant, double dt, int horizon_steps);

struct ControlPolicySpec {
    Variant variant = Variant::Classic;
    HorizonSpec horizon;            ///< already shaped for the variant
    ChannelSpec channel;
    double action_bound = 1.0;      ///< box constraint, |a_i| <= bound
    int action_grid_size = 21;      ///< odd, >= 3; grid contains 0 and +-bound
    double decision_dt = 0.02;      ///< time between action decisions
    double sim_dt = 1e-3;           ///< inner integration step
    int expectation_samples = 1;    ///< successors averaged per candidate

    void validate() const;
};

/// Closed-loop record. states/times have one more entry than actions: the
/// terminal state is kept.
struct Rollout {
    std::vector<double> times;
    std::vector<StateVector> states;
    std::vector<ActionVector> actions;
    std::vector<double> empowerment_trace;  ///< value of the chosen successor
    bool failed = false;                    ///< a step blew up; record is partial
};

struct GreedyChoice {
    ActionVector action;
    double value_nats = 0.0;
};

/// Uniform grid over [-bound, bound] per action dimension, Cartesian
/// product across dimensions, in lexicographic order. Throws GridTooLarge
/// above 1e5 candidates.
std::vector<ActionVector> candidate_actions(const ControlPolicySpec& spec, int d_a);

/// Evaluate every candidate action's successor empowerment and return the
/// argmax. Ties break toward smaller action norm, then lexicographically.
/// Candidates whose successor blows up are skipped; if all blow up the
/// error propagates. When expectation_samples > 1 and noise is given, each
/// candidate is scored by an average over stochastic successors drawn from
/// seeds derived from noise_seed (deterministic for any thread count).
GreedyChoice greedy_action(const SystemModel& model, const StateVector& x,
                           const ControlPolicySpec& spec, const NoiseSpec* noise = nullptr,
                           std::uint64_t noise_seed = 0);

/// Simulate the closed loop: at each decision step pick the greedy action,
/// hold it while integrating stochastically at sim_dt. Deterministic given
/// the seed. A non-finite state aborts with a partial record and the
/// failed flag set.
Rollout run_rollout(const SystemModel& model, const StateVector& x0, double duration_s,
                    const ControlPolicySpec& spec, const NoiseSpec& noise, std::uint64_t seed);

}  // namespace emp

#endif  // EMP_CONTROLLER_HPP
