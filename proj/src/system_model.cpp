#include "emp/system_model.hpp"

#include <cassert>
#include <stdexcept>

#include "emp/errors.hpp"

namespace emp {

namespace {

void check_dims(const SystemModel& model, const StateVector& x, const ActionVector& a,
                double dt) {
    if (dt <= 0.0) throw std::invalid_argument("step: dt must be > 0");
    if (x.size() != model.d_x) throw std::invalid_argument("step: state length != d_x");
    if (a.size() != model.d_a) throw std::invalid_argument("step: action length != d_a");
}

}  // namespace

StateVector step_deterministic(const SystemModel& model, const StateVector& x,
                               const ActionVector& a, double dt) {
    check_dims(model, x, a, dt);
    StateVector next = x + model.drift(x) * dt + model.gain(x) * (a * dt);
    if (!next.allFinite()) {
        throw NonFiniteState("step_deterministic produced a non-finite state (dt too coarse?)");
    }
    return next;
}

StateVector step_stochastic(const SystemModel& model, const StateVector& x,
                            const ActionVector& a, double dt, const NoiseSpec& noise,
                            RngStream& rng) {
    check_dims(model, x, a, dt);
    StateVector next = x + model.drift(x) * dt + model.gain(x) * (a * dt);
    if (noise.process_std > 0.0) {
        std::normal_distribution<double> gauss(0.0, noise.process_std * std::sqrt(dt));
        ActionVector xi(model.d_a);
        for (int i = 0; i < model.d_a; ++i) xi[i] = gauss(rng);
        next += model.gain(x) * xi;
    }
    if (!next.allFinite()) {
        throw NonFiniteState("step_stochastic produced a non-finite state (dt too coarse?)");
    }
    return next;
}

Matrix finite_diff_jacobian(const std::function<StateVector(const StateVector&)>& fn,
                            const StateVector& x, double h) {
    assert(h > 0.0);
    const auto n = x.size();
    StateVector probe = x;
    Matrix jac(fn(x).size(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        probe[j] = x[j] + h;
        const StateVector hi = fn(probe);
        probe[j] = x[j] - h;
        const StateVector lo = fn(probe);
        probe[j] = x[j];
        jac.col(j) = (hi - lo) / (2.0 * h);
    }
    return jac;
}

}  // namespace emp
