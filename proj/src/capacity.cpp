#include "emp/capacity.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "emp/errors.hpp"

namespace emp {

namespace {

constexpr double kSingularValueFloor = 1e-12;  // relative truncation threshold

std::vector<double> channel_gains(const std::vector<double>& rho, CapacityConvention conv) {
    if (conv == CapacityConvention::Linear) return rho;
    std::vector<double> squared(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) squared[i] = rho[i] * rho[i];
    return squared;
}

EmpowermentResult empowerment_from_matrix(const SensitivityMatrix& F, const StateVector& x0,
                                          const ChannelSpec& channel) {
    const double effective_noise = channel.noise_std * std::sqrt(F.spec.dt);
    EmpowermentResult result;
    result.spec = F.spec;
    result.state = x0;
    result.singular_values = scaled_singular_values(F.entries, effective_noise);
    const std::vector<double> gains = channel_gains(result.singular_values, channel.convention);
    result.allocation = water_fill(gains, channel.power);
    result.value_nats = allocation_capacity(gains, result.allocation);
    return result;
}

}  // namespace

std::vector<double> scaled_singular_values(const Matrix& F, double noise_std) {
    if (noise_std <= 0.0) throw std::invalid_argument("noise_std must be > 0");
    if (!F.allFinite()) throw NonFiniteState("scaled_singular_values: matrix not finite");

    Eigen::BDCSVD<Matrix> svd(F);
    if (svd.info() != Eigen::Success) {
        throw NumericalFailure("singular value decomposition did not converge");
    }
    const auto& sv = svd.singularValues();
    std::vector<double> rho(sv.size());
    const double cutoff = sv.size() > 0 ? kSingularValueFloor * sv[0] : 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        rho[i] = sv[i] > cutoff ? sv[i] / noise_std : 0.0;
    }
    return rho;
}

std::vector<double> scaled_singular_values(const SensitivityMatrix& F, double noise_std) {
    return scaled_singular_values(F.entries, noise_std);
}

PowerAllocation water_fill(const std::vector<double>& rho, double power) {
    if (power < 0.0) throw std::invalid_argument("water_fill: power must be >= 0");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] < 0.0) throw std::invalid_argument("water_fill: gains must be >= 0");
        if (i > 0 && rho[i] > rho[i - 1]) {
            throw std::invalid_argument("water_fill: gains must be sorted descending");
        }
    }

    PowerAllocation alloc;
    alloc.channel_powers.assign(rho.size(), 0.0);

    int positive = 0;
    while (positive < static_cast<int>(rho.size()) && rho[positive] > 0.0) ++positive;

    if (positive == 0 || power == 0.0) {
        // Uncontrollable channel set or empty budget: zero allocation.
        alloc.water_level = positive > 0 ? 1.0 / rho[0] : 0.0;
        alloc.active_count = 0;
        return alloc;
    }

    // Try k active channels: mu_k = (P + sum_{i<k} 1/rho_i) / k, keep the
    // largest k for which the smallest active channel stays nonnegative.
    double inv_sum = 0.0;
    double mu = 0.0;
    int active = 0;
    for (int k = 1; k <= positive; ++k) {
        inv_sum += 1.0 / rho[k - 1];
        const double mu_k = (power + inv_sum) / k;
        if (mu_k >= 1.0 / rho[k - 1]) {
            mu = mu_k;
            active = k;
        } else {
            break;
        }
    }

    alloc.water_level = mu;
    alloc.active_count = active;
    for (int i = 0; i < active; ++i) alloc.channel_powers[i] = mu - 1.0 / rho[i];

    // Redistribute the rounding residue onto the strongest channel so the
    // budget is met to machine precision.
    double used = 0.0;
    for (int i = 0; i < active; ++i) used += alloc.channel_powers[i];
    alloc.channel_powers[0] += power - used;
    return alloc;
}

double allocation_capacity(const std::vector<double>& rho, const PowerAllocation& alloc) {
    double nats = 0.0;
    for (std::size_t i = 0; i < rho.size() && i < alloc.channel_powers.size(); ++i) {
        nats += std::log1p(rho[i] * alloc.channel_powers[i]);
    }
    return 0.5 * nats;
}

EmpowermentResult generalized_empowerment(const SystemModel& model, const StateVector& x0,
                                          const HorizonSpec& spec, const ChannelSpec& channel) {
    const SensitivityMatrix F = build_sensitivity_matrix(model, x0, spec);
    return empowerment_from_matrix(F, x0, channel);
}

EmpowermentResult classic_empowerment(const SystemModel& model, const StateVector& x0,
                                      int horizon_steps, double dt, const ChannelSpec& channel) {
    return generalized_empowerment(model, x0, HorizonSpec::classic(dt, horizon_steps), channel);
}

EmpowermentResult kicked_cef(const SystemModel& model, const StateVector& x0, int horizon_steps,
                             double dt, const ChannelSpec& channel) {
    return generalized_empowerment(model, x0, HorizonSpec::kicked(dt, horizon_steps), channel);
}

LyapunovResult controlled_lyapunov(const SystemModel& model, const StateVector& x0,
                                   int horizon_steps, double dt, const ChannelSpec& channel) {
    const HorizonSpec spec = HorizonSpec::single_kick_final(dt, horizon_steps);
    const AutonomousRollout rollout = rollout_autonomous(model, x0, spec);

    LyapunovResult result;
    {
        SensitivityMatrix F;
        F.spec = spec;
        F.d_x = model.d_x;
        F.d_a = model.d_a;
        F.entries = action_sensitivity(rollout, horizon_steps, 0);
        result.empowerment = empowerment_from_matrix(F, x0, channel);
    }

    // Growth of a perturbation injected through the raw gain. The chain is
    // renormalized periodically so arbitrarily long horizons stay in range.
    Matrix chain = model.gain(x0);
    double log_scale = 0.0;
    for (int tau = 1; tau < horizon_steps; ++tau) {
        chain = rollout.step_jacobians[tau] * chain;
        if (tau % 64 == 0) {
            const double mag = chain.cwiseAbs().maxCoeff();
            if (mag > 1e150 || (mag > 0.0 && mag < 1e-150)) {
                chain /= mag;
                log_scale += std::log(mag);
            }
        }
    }
    if (!chain.allFinite()) throw NonFiniteState("controlled_lyapunov: chain not finite");

    Eigen::JacobiSVD<Matrix> svd(chain);
    const auto& sv = svd.singularValues();
    const int n_exp = static_cast<int>(std::min<Eigen::Index>(model.d_x, model.d_a));
    const double horizon_s = horizon_steps * dt;
    for (int i = 0; i < n_exp; ++i) {
        if (sv[i] <= 0.0 || (sv[0] > 0.0 && sv[i] / sv[0] < 1e-15)) {
            result.spectrum_unreliable = true;
        }
        const double exponent =
            sv[i] > 0.0 ? (std::log(sv[i]) + log_scale) / horizon_s
                        : -std::numeric_limits<double>::infinity();
        result.log_spectrum.push_back(exponent);
    }
    return result;
}

}  // namespace emp
