#ifndef EMP_BANDS_HPP
#define EMP_BANDS_HPP

#include <functional>

#include "emp/controller.hpp"
#include "emp/types.hpp"

namespace emp {

using StatePredicate = std::function<bool(const StateVector&)>;

inline bool pendulum_upright(const StateVector& x, double angle_tol = 0.2,
                             double rate_tol = 0.5) {
    return std::abs(wrap_angle(x[0])) < angle_tol && std::abs(x[1]) < rate_tol;
}

/// Both links near vertical: link 2's absolute angle is theta1 + theta2.
inline bool double_pendulum_upright(const StateVector& x, double angle_tol = 0.2) {
    return std::abs(wrap_angle(x[0])) < angle_tol &&
           std::abs(wrap_angle(x[0] + x[1])) < angle_tol;
}

inline bool cartpole_pole_upright(const StateVector& x, double angle_tol = 0.2) {
    return std::abs(wrap_angle(x[1])) < angle_tol;
}

/// Earliest recorded time whose state satisfies the predicate, -1 if none.
inline double first_time_in_band(const Rollout& rollout, const StatePredicate& band) {
    for (std::size_t i = 0; i < rollout.states.size(); ++i) {
        if (band(rollout.states[i])) return rollout.times[i];
    }
    return -1.0;
}

/// True when every recorded state in [t_start, t_end] satisfies the
/// predicate (and the window contains at least one sample).
inline bool band_held(const Rollout& rollout, const StatePredicate& band, double t_start,
                      double t_end) {
    bool any = false;
    for (std::size_t i = 0; i < rollout.states.size(); ++i) {
        if (rollout.times[i] < t_start || rollout.times[i] > t_end) continue;
        any = true;
        if (!band(rollout.states[i])) return false;
    }
    return any;
}

/// Earliest time t such that the band holds continuously on [t, t+hold_s];
/// -1 if the rollout never sustains it.
inline double first_sustained_hold(const Rollout& rollout, const StatePredicate& band,
                                   double hold_s) {
    const std::size_t n = rollout.states.size();
    std::size_t run_start = 0;
    bool in_run = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (band(rollout.states[i])) {
            if (!in_run) {
                run_start = i;
                in_run = true;
            }
            if (rollout.times[i] - rollout.times[run_start] >= hold_s) {
                return rollout.times[run_start];
            }
        } else {
            in_run = false;
        }
    }
    return -1.0;
}

}  // namespace emp

#endif  // EMP_BANDS_HPP
