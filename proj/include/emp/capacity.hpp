#ifndef EMP_CAPACITY_HPP
#define EMP_CAPACITY_HPP

#include <vector>

#include "emp/sensitivity.hpp"
#include "emp/system_model.hpp"
#include "emp/types.hpp"

namespace emp {

/// How channel gains enter the capacity sum: Linear pairs the noise-scaled
/// singular values directly with the allocated powers inside the log;
/// Squared uses their squares (the conventional Gaussian-channel form).
enum class CapacityConvention { Linear, Squared };

struct ChannelSpec {
    double power = 1.0;      ///< total control power over the control window
    double noise_std = 1.0;  ///< std of the effective Gaussian channel noise, > 0
    CapacityConvention convention = CapacityConvention::Linear;
};

/// Water-filling solution: per-channel input powers summing to the budget.
struct PowerAllocation {
    std::vector<double> channel_powers;  ///< sigma_i >= 0, same length as the gain list
    double water_level = 0.0;            ///< mu; sigma_i = mu - 1/rho_i on active channels
    int active_count = 0;
};

struct EmpowermentResult {
    double value_nats = 0.0;
    std::vector<double> singular_values;  ///< noise-scaled, descending
    PowerAllocation allocation;
    HorizonSpec spec;
    StateVector state;
};

/// Controlled Lyapunov data: growth rates (per second) of perturbations
/// injected through the control gain, plus the single-kick final-state
/// empowerment over the same horizon.
struct LyapunovResult {
    EmpowermentResult empowerment;
    std::vector<double> log_spectrum;  ///< min(d_x, d_a) exponents, descending
    bool spectrum_unreliable = false;  ///< set when a singular value underflowed
};

/// Singular values of F divided by noise_std, descending; entries below
/// 1e-12 of the largest are truncated to zero. Throws NumericalFailure if
/// the decomposition does not converge.
std::vector<double> scaled_singular_values(const Matrix& F, double noise_std);
std::vector<double> scaled_singular_values(const SensitivityMatrix& F, double noise_std);

/// Maximize 0.5 * sum log(1 + rho_i sigma_i) subject to sigma_i >= 0 and
/// sum sigma_i = power. Exact sorted-prefix solution, no iteration. All-zero
/// gains yield the zero allocation (capacity 0), not an error.
PowerAllocation water_fill(const std::vector<double>& rho, double power);

/// 0.5 * sum log(1 + rho_i sigma_i) for a given allocation, in nats.
double allocation_capacity(const std::vector<double>& rho, const PowerAllocation& alloc);

/// Empowerment of state x0 for the horizon's index triple: sensitivity
/// matrix -> noise-scaled singular values -> water-filling. The power
/// budget is an integrated energy over the control window, so the discrete
/// channel carries a sqrt(dt) input normalization; this keeps values stable
/// under time-step refinement at a fixed physical horizon.
EmpowermentResult generalized_empowerment(const SystemModel& model, const StateVector& x0,
                                          const HorizonSpec& spec, const ChannelSpec& channel);

/// Final-state empowerment: actions over the whole horizon, only the last
/// state observed.
EmpowermentResult classic_empowerment(const SystemModel& model, const StateVector& x0,
                                      int horizon_steps, double dt, const ChannelSpec& channel);

/// Single initial action, whole trajectory observed.
EmpowermentResult kicked_cef(const SystemModel& model, const StateVector& x0, int horizon_steps,
                             double dt, const ChannelSpec& channel);

/// Single initial action, only the final state observed, long horizon. The
/// log-spectrum is computed from the renormalized Jacobian chain applied to
/// the raw control gain, reported per unit time.
LyapunovResult controlled_lyapunov(const SystemModel& model, const StateVector& x0,
                                   int horizon_steps, double dt, const ChannelSpec& channel);

}  // namespace emp

#endif  // EMP_CAPACITY_HPP
